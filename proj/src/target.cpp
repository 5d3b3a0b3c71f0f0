#include "morphbound/target.hpp"

#include "morphbound/errors.hpp"

namespace morphbound {

TargetSpec::TargetSpec(std::vector<long long> ds) : degrees(std::move(ds)) {
    if (degrees.empty()) throw input_error("target needs at least one degree");
    for (long long m : degrees)
        if (m < 2) throw input_error("complete-intersection degrees must be at least 2");
}

BigInt TargetSpec::product() const {
    BigInt p = 1;
    for (long long m : degrees) p *= m;
    return p;
}

Rational ci_map_degree(long long h3, const GeneratorDegree& deg, const TargetSpec& target) {
    if (h3 < 1) throw input_error("H^3 must be a positive integer");
    BigInt d = deg.d;
    return Rational(BigInt(h3) * d * d * d, target.product());
}

NodeThreshold min_nodes_required(const TargetSpec& target) {
    Rational exact = Rational(target.product()) * Rational(4, 9);
    return NodeThreshold{exact, exact.ceil()};
}

} // namespace morphbound
