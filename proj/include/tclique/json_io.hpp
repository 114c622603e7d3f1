#pragma once

#include <json.hpp>

#include "tclique/bounds.hpp"
#include "tclique/search.hpp"
#include "tclique/solver.hpp"

namespace tclique {

inline void to_json(nlohmann::json& j, const SpectralResult& r) {
  j = nlohmann::json{{"mu", r.mu},
                     {"residual", r.residual},
                     {"iterations", r.iterations},
                     {"converged", r.converged},
                     {"method", to_string(r.method)},
                     {"eigenvector", r.eigenvector.entries}};
}

// flat object, field names as in the report
inline void to_json(nlohmann::json& j, const BoundReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"t", r.t},
                     {"c_t", r.c_t},
                     {"lower", r.lower},
                     {"mu", r.mu},
                     {"upper", r.upper},
                     {"lower_equality", r.lower_equality},
                     {"upper_equality", r.upper_equality},
                     {"equality_certificates", r.equality_certificates}};
}

inline void to_json(nlohmann::json& j, const ExtremalRecord& r) {
  j = nlohmann::json{{"best_value", r.best_value},
                     {"witness", r.witness_graph6},
                     {"examined", r.examined},
                     {"skipped_non_H_free", r.skipped_non_h_free},
                     {"matches_turan", r.matches_turan}};
}

}  // namespace tclique
