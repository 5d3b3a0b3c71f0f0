#ifndef MORPHBOUND_TARGET_HPP
#define MORPHBOUND_TARGET_HPP

#include <vector>

#include "morphbound/invariants.hpp"

namespace morphbound {

// A smooth 3-dimensional complete intersection of hypersurfaces of the given
// degrees, as a replacement target for the quadric (degrees [2] recover it).
struct TargetSpec {
    explicit TargetSpec(std::vector<long long> degrees);
    std::vector<long long> degrees; // each >= 2
    BigInt product() const;
};

// Degree of a candidate morphism onto the target: H^3 d^3 / prod(degrees).
// Non-integrality excludes the degree.
Rational ci_map_degree(long long h3, const GeneratorDegree& deg, const TargetSpec& target);

// Smallest number of nodes a pulled-back hyperplane section must acquire for
// the double-point argument to bite: (4/9) prod(degrees), rounded up.
struct NodeThreshold {
    Rational exact;
    BigInt ceiling;
};

NodeThreshold min_nodes_required(const TargetSpec& target);

} // namespace morphbound

#endif
