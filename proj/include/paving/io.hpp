#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "paving/analysis.hpp"
#include "paving/matroid.hpp"
#include "paving/pseudomodular.hpp"

namespace paving {

// Canonical matroid file: format_version/n/rank/labels/circuit_hyperplanes,
// labels inside each hyperplane sorted, hyperplanes sorted lexicographically.
// Serializing the same matroid twice yields byte-identical text.
std::string to_matroid_file(const SparsePavingMatroid& m);

// Parses and validates; throws ParseError on malformed input and the usual
// validation errors on a well-formed but invalid matroid.
SparsePavingMatroid from_matroid_file(const std::string& text);

void save_matroid(const SparsePavingMatroid& m, const std::string& path);
SparsePavingMatroid load_matroid(const std::string& path);

// JSON report bodies (schemas shipped in docs/).
nlohmann::ordered_json flat_json(const SparsePavingMatroid& m, const Flat& f);
nlohmann::ordered_json pm_report_json(const SparsePavingMatroid& m,
                                      const PmReport& rep);
nlohmann::ordered_json search_report_json(const std::vector<SimpleGraph>& graphs,
                                          const SearchReport& rep);

}  // namespace paving
