#include "mta/report.hpp"

#include <ostream>
#include <sstream>

namespace mta {

void write_motif_report(std::ostream& out, const MotifSet& motifs, std::size_t min_length) {
  std::size_t rank = 0;
  for (const auto& motif : motifs.motifs) {
    if (motif.point_length < min_length) continue;
    out << "motif " << ++rank << ": length=" << motif.point_length << " count=" << motif.occurrences.size()
        << " starts=";
    for (std::size_t i = 0; i < motif.occurrences.size(); ++i) {
      if (i) out << ',';
      out << motif.occurrences[i];
    }
    out << " symbols=" << render(motif.text) << '\n';
  }
  out << "quality(min_len=" << min_length << ")=" << quality_measure(motifs, min_length) << '\n';
}

std::string motif_report(const MotifSet& motifs, std::size_t min_length) {
  std::ostringstream out;
  write_motif_report(out, motifs, min_length);
  return out.str();
}

}  // namespace mta
