#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ruledcent/classify.hpp"
#include "ruledcent/homotopy.hpp"
#include "ruledcent/strata.hpp"
#include "ruledcent/weights.hpp"

namespace ruledcent {

struct ClassificationRecord {
    SymplecticForm form;
    CyclicAction action;
    bool effective = true;
    bool hamiltonian = true;
    WeightTable weights;
    ExtensionSet extensions;
    ActionClass cls;
    std::vector<Stratum> strata;             // empty when unresolved
    std::optional<CentralizerType> centralizer;
    std::vector<std::string> warnings;
};

// Throws the underlying Error for invalid or non-Hamiltonian input.
ClassificationRecord build_record(const SymplecticForm& form, const CyclicAction& x);

nlohmann::ordered_json to_json(const ClassificationRecord& rec, int poincare_degree = 4);
std::string to_text(const ClassificationRecord& rec, bool color);

struct ScanRow {
    std::int64_t n, a, b, r;
    std::string cls;
    std::string extensions;
    std::string codims;
    std::string centralizer;
    std::string components;
};

std::vector<ScanRow> scan(const SymplecticForm& form, std::int64_t n_lo, std::int64_t n_hi, std::int64_t r_max,
                          unsigned threads);
std::string scan_csv(const SymplecticForm& form, const std::vector<ScanRow>& rows);

} // namespace ruledcent
