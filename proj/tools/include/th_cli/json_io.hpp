#pragma once

// JSON wire formats used by the th command line tool. All encoders emit
// objects with alphabetically sorted keys and lexicographically sorted sets,
// so repeated runs are byte-identical.

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"
#include "th/density.hpp"
#include "th/measure.hpp"
#include "th/sampling.hpp"

namespace th::jsonio {

using json = nlohmann::json;

json complex_to_json(const std::complex<double>& z);
/// Accepts a plain number (imaginary part zero) or {"re":…,"im":…}.
std::complex<double> complex_from_json(const json& j);

json to_json(const GroupSpec& spec);   // {"invariant_factors":[…]}
GroupSpec group_from_json(const json& j, Int max_order = kDefaultMaxGroupOrder);

json to_json(const GroupElement& x);   // [3] or [1,2]
GroupElement element_from_json(const json& j, const GroupSpec& spec);

json to_json(const Rotation& r);       // {"den":…,"num":…}
Rotation rotation_from_json(const json& j);

/// {"basis":[[…]],"generators":[[…]],"order":…}; decoding reads
/// "generators" (falling back to "basis" rows) and canonicalizes.
json to_json(const Subgroup& h);
Subgroup subgroup_from_json(const json& j, const GroupSpec& spec);

json to_json(const PointSet& s);       // {"points":[[…],…]}
PointSet pointset_from_json(const json& j, const GroupSpec& spec);

/// {"atoms":[{"point":…,"weight":…},…],"kind":"nonnegative"|"complex"};
/// nonnegative weights are plain numbers, complex ones {"re":…,"im":…}.
json to_json(const DiscreteMeasure& m);
DiscreteMeasure measure_from_json(const json& j, const GroupSpec& spec);

json to_json(const CrossSection& cs);  // [{"coset_rep":…,"image":…},…]

json to_json(const DensityVerdict& v);
json to_json(const ExtractResult& r);

json to_json(const Signal& x);         // {"group":…,"values":[…]}
Signal signal_from_json(const json& j, Int max_order = kDefaultMaxGroupOrder);

/// [{"element":…,"value":…},…] keyed by subgroup element in canonical order.
json samples_to_json(const std::vector<std::complex<double>>& samples,
                     const Subgroup& h);
/// Accepts the keyed form or a plain array in canonical subgroup order.
std::vector<std::complex<double>> samples_from_json(const json& j,
                                                    const Subgroup& h);

}  // namespace th::jsonio
