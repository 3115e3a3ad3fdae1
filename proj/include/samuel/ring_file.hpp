#ifndef SAMUEL_RING_FILE_HPP
#define SAMUEL_RING_FILE_HPP

#include <string_view>

#include "samuel/local_ring.hpp"

namespace samuel {

// Line-oriented ring files, '#' starts a comment:
//   field Q          (or: field F 7)
//   vars x y z
//   ideal x*y - z^3  (one line per generator)
//   dim 2            (required for multi-generator ideals)
LocalRingPresentation parse_ring_file(std::string_view text);

}  // namespace samuel

#endif
