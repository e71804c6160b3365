#pragma once

#include <string>
#include <string_view>

#include "locality/cache_model.hpp"

namespace locality {

// Text formats shared by the CLI and the library. Readers throw ParseError
// with a 1-based line number.

/// `#kind=rt|rd`, `#n=`, `#m=` headers, then `value count` lines and a
/// final `inf count` line.
std::string format_histogram(const ReuseHistogram& h);
ReuseHistogram parse_histogram(std::string_view text);

/// `#kind=rt|rd` header, then one line per datum: `id f_e r_2 r_3 ...`.
std::string format_profiles(const PerDatumProfiles& pd);
PerDatumProfiles parse_profiles(std::string_view text);

/// `#kind=rt|rd` header, then one value per line (`inf` for infinity).
std::string format_sequence(const ReuseSequence& seq);
ReuseSequence parse_sequence(std::string_view text);

/// What a reconstruct input file holds, judged from its headers and shape.
enum class InputKind { Sequence, Profiles, Histogram };
InputKind sniff_input_kind(std::string_view text);

/// `x,window_count,total_wss,fp,fp_float`
std::string footprint_csv(const FootprintCurve& c);
/// `x,ss_fp,ss_fp_float`
std::string steady_state_csv(const SteadyStateCurve& c);
/// `cache_size,miss_ratio,provenance`
std::string mrc_csv(const MissRatioCurve& c);
/// `value,count` with `inf` last.
std::string histogram_csv(const ReuseHistogram& h);
/// `lo,hi,count` with `inf,inf,count` last.
std::string binned_csv(const BinnedHistogram& b);

}  // namespace locality
