#pragma once

// JSON forms of every library object. Players are 1-based in sets; exact numbers
// (rationals and big integers) are decimal strings; sizes and small counts are numbers.

#include <iosfwd>
#include <string>

#include "mbc/counting.hpp"
#include "mbc/enumerate.hpp"
#include "mbc/games.hpp"
#include "mbc/orbits.hpp"

namespace mbc {

/// {"n": 3, "sets": [[1], [2, 3]]}
std::string collection_to_json(const Collection& c);
Collection collection_from_json(const std::string& text);

/// {"n": 3, "columns": [[1, 2], [3]]}; column order is kept.
std::string matrix_to_json(const ZeroOneMatrix& m);
ZeroOneMatrix matrix_from_json(const std::string& text);

std::string weights_to_json(const WeightVector& w);
WeightVector weights_from_json(const std::string& text);

/// {"kind": ..., "weights": [...] | null, "witness": collection | null}
std::string certificate_to_json(const BalanceCertificate& c);
BalanceCertificate certificate_from_json(const std::string& text);

/// {"n": 6, "per_m": ["1", ...], "total": "200214"}
std::string count_table_to_json(const CountTable& t);
CountTable count_table_from_json(const std::string& text);

std::string bound_report_to_json(const BoundReport& r);
BoundReport bound_report_from_json(const std::string& text);

std::string orbit_summary_to_json(const OrbitSummary& s, bool full);

/// {"n": 3, "v": ["0", ...]} indexed by coalition mask.
std::string game_to_json(const TUGame& g);
TUGame game_from_json(const std::string& text);

std::string core_report_to_json(const CoreReport& r);
CoreReport core_report_from_json(const std::string& text);

/// One line: {"n": 3, "sets": [[1], [2, 3]], "weights": ["1", "1"]}
std::string minimal_balanced_to_json_line(const MinimalBalanced& mb);
MinimalBalanced minimal_balanced_from_json_line(const std::string& line);

/// Reads JSON lines into a finished result; all lines must share n.
EnumerationResult read_collections(std::istream& in, int n);

/// Optional pretty indent; 0 keeps the compact single-line form.
std::string reformat_json(const std::string& text, int indent);

}  // namespace mbc
