#pragma once

#include <string>
#include <vector>

#include "ideal24/script.hpp"

namespace ideal24 {

/// Line-oriented construction format:
///
///   name G
///   copies 1
///   cusp a +0+0 -0+0
///   paircolor scope=all color=green map=-x,-y,-z,-w
///   paircolor scope=0 color=green map=x,y,z,w to=1
///   pair (0,x1+) (0,x1-) map=antipodal
///   boundaryglue src=0 dst=1 seed_src=+++- seed_dst=+-++ vertices=m1:b,m2:c,...
///
/// `#` starts a comment. Maps are mapspecs or one of identity, antipodal, H.
/// Throws ParseError with the position of the offending token.
ConstructionScript parse_construction(const std::string& text);
std::string print_construction(const ConstructionScript& s);

/// identity / antipodal / H, else a mapspec. Throws InvalidArgument.
Isometry parse_named_map(const std::string& text);

const std::vector<std::string>& preset_names();
/// Throws InvalidArgument for an unknown name.
const std::string& preset_text(const std::string& name);
ConstructionScript preset(const std::string& name);

/// "preset:NAME" or a path to a construction file.
ConstructionScript load_construction(const std::string& arg);

}  // namespace ideal24
