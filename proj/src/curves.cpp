#include "saito/curves.hpp"

#include <numeric>

#include "saito/errors.hpp"

namespace saito {

namespace {

void validate_characteristic(i64 beta0, const std::vector<i64>& betas) {
    if (beta0 == 1) throw SmoothCurve("beta0 = 1 describes a smooth branch");
    if (beta0 < 1) throw InvalidCharacteristic("beta0 must be positive");
    i64 prev = beta0;
    i64 e = beta0;
    for (i64 b : betas) {
        if (b <= prev)
            throw InvalidCharacteristic("characteristic exponents must be strictly increasing");
        i64 next = std::gcd(e, b);
        if (next >= e)
            throw InvalidCharacteristic("gcd chain must strictly decrease at every exponent");
        e = next;
        prev = b;
    }
    if (e != 1)
        throw InvalidCharacteristic("gcd chain ends at " + std::to_string(e) + ", not 1");
}

}  // namespace

std::vector<i64> multiplicity_sequence(i64 beta0, const std::vector<i64>& betas) {
    validate_characteristic(beta0, betas);
    std::vector<i64> seq;
    i64 e = beta0;
    i64 prev = beta0;
    bool first = true;
    for (i64 b : betas) {
        // subtractive Euclid on the pair; emissions are the point multiplicities
        i64 x = e;
        i64 y = first ? b : b - prev;
        first = false;
        while (x > 0 && y > 0) {
            seq.push_back(std::min(x, y));
            if (x > y)
                x -= y;
            else
                y -= x;
        }
        e = std::gcd(e, b);
        prev = b;
    }
    return seq;
}

NumberedTree tree_from_char_exponents(i64 beta0, const std::vector<i64>& betas) {
    const std::vector<i64> seq = multiplicity_sequence(beta0, betas);
    const int count = static_cast<int>(seq.size());

    // each point is proximate to a consecutive run of successors whose
    // multiplicities sum to its own; the last point closes with the branch
    std::vector<std::vector<VertexId>> parents(static_cast<std::size_t>(count));
    for (int i = 0; i + 1 < count; ++i) {
        i64 remaining = seq[i];
        int j = i + 1;
        while (remaining > 0 && j < count) {
            parents[j].push_back(i);
            remaining -= seq[j];
            ++j;
        }
        if (remaining != 0)
            throw InternalInconsistency("proximity run of point " + std::to_string(i) +
                                        " does not close; multiplicity sequence is inconsistent");
    }
    for (int j = 1; j < count; ++j)
        if (parents[j].size() > 2)
            throw InternalInconsistency("point " + std::to_string(j) + " proximate to more than two points");
    if (seq.back() != 1) throw InternalInconsistency("multiplicity sequence does not end at 1");

    NumberedTree result{ResolutionTree::from_parent_sets(parents),
                        Numbering(static_cast<std::size_t>(count), 0)};
    result.numbering.back() = 1;

    if (valuations(result.tree, result.numbering) != seq)
        throw InternalInconsistency("valuations do not reproduce the multiplicity sequence");
    return result;
}

NumberedTree builtin_family(const std::string& name, const std::vector<i64>& params) {
    auto expect_params = [&](std::size_t k) {
        if (params.size() != k)
            throw UnknownFamily("family '" + name + "' takes " + std::to_string(k) + " parameter(s), got " +
                                std::to_string(params.size()));
    };
    if (name == "cusp") {
        expect_params(0);
        ResolutionTree t = ResolutionTree::build({ConstructionStep::rule1(0), ConstructionStep::rule2(0, 1)});
        return {std::move(t), {0, 0, 1}};
    }
    if (name == "r_cusps") {
        expect_params(1);
        const i64 r = params[0];
        if (r < 2) throw UnknownFamily("r_cusps requires r >= 2");
        if (r % 2 != 0) throw OddR("r_cusps dimension formulas require even r, got " + std::to_string(r));
        ResolutionTree t = ResolutionTree::build({ConstructionStep::rule1(0), ConstructionStep::rule2(0, 1)});
        return {std::move(t), {0, 0, r}};
    }
    if (name == "double_cusp") {
        expect_params(0);
        ResolutionTree t = ResolutionTree::build({ConstructionStep::rule1(0), ConstructionStep::rule1(0),
                                                  ConstructionStep::rule2(0, 2), ConstructionStep::rule2(0, 1)});
        return {std::move(t), {0, 0, 0, 1, 1}};
    }
    if (name == "example1") {
        expect_params(0);
        ResolutionTree t = ResolutionTree::build(
            {ConstructionStep::rule1(0), ConstructionStep::rule1(0), ConstructionStep::rule2(0, 2)});
        return {std::move(t), {0, 2, 1, 2}};
    }
    throw UnknownFamily("unknown family '" + name + "'");
}

MilnorResult milnor_number(const ResolutionTree& tree, const Numbering& n) {
    const auto nu = valuations(tree, n);
    i64 mu = 1;
    for (i64 v : nu) mu += v * (v - 1);
    i64 branches = 0;
    for (i64 b : n) branches += b;
    mu -= branches;
    return {mu, branches};
}

}  // namespace saito
