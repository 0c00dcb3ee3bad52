#ifndef CIRCULANT_REPORT_HPP
#define CIRCULANT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "abelian.hpp"
#include "analyzer.hpp"
#include "oracle.hpp"

namespace circulant {

// JSON views of analyzer and oracle results. Insertion order is preserved so
// that parsing an emitted report and dumping it again is byte-identical.

using Json = nlohmann::ordered_json;

inline Json to_json(std::vector<AbelianType> const &groups)
{
  Json out = Json::array();
  for (auto const &g : groups)
    out.push_back(g.to_string());
  return out;
}

inline Json to_json(PrimeLayers const &pl)
{
  return Json{{"p", pl.p},
              {"a", pl.a},
              {"valid_levels", pl.valid_levels},
              {"layers", pl.layer_sizes}};
}

inline Json analysis_json(ConnectionSet const &s)
{
  auto d = decompose(s);
  auto r = realizable_groups(d);
  Json per_prime = Json::array();
  for (auto const &pl : d.primes)
    per_prime.push_back(to_json(pl));
  return Json{{"n", s.n()},
              {"S", s.members()},
              {"arithmetic_condition", arithmetic_condition(s.n())},
              {"per_prime", per_prime},
              {"minimal_group", minimal_group(d).to_string()},
              {"realizable", to_json(r.groups)},
              {"exact", r.exact}};
}

inline Json to_json(ValidationReport const &r)
{
  Json out{{"n", r.s.n()},
           {"S", r.s.members()},
           {"predicted", to_json(r.predicted)},
           {"exact", r.exact},
           {"actual", r.actual ? to_json(*r.actual) : Json(nullptr)},
           {"verdict", to_string(r.verdict)},
           {"automorphism_order",
            r.automorphism_order ? Json(*r.automorphism_order) : Json(nullptr)}};
  if (!r.capped_reason.empty())
    out["capped_reason"] = r.capped_reason;
  return out;
}

} // namespace circulant

#endif // CIRCULANT_REPORT_HPP
