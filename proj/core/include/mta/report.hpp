#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "mta/motif.hpp"

namespace mta {

// One line per motif with point_length >= min_length, ranked from 1:
//   motif <rank>: length=<points> count=<n> starts=<i,j,...> symbols=<string>
// followed by
//   quality(min_len=<L>)=<integer>
void write_motif_report(std::ostream& out, const MotifSet& motifs, std::size_t min_length);
std::string motif_report(const MotifSet& motifs, std::size_t min_length);

}  // namespace mta
