#pragma once

// Gap arithmetic on NAND circuits: negation, sum, product, padding, shifts
// by a constant, and the disjunctive extension used for involutions.

#include "permhard/circuits/boolean_circuit.hpp"

namespace permhard {

/// Incremental NAND-only circuit construction.
class CircuitBuilder {
public:
    explicit CircuitBuilder(std::size_t inputs) : n_(inputs) {}

    std::size_t input(std::size_t i) const {
        if (i >= n_) throw DomainError("CircuitBuilder: input index out of range");
        return i;
    }
    std::size_t nand(std::size_t a, std::size_t b) {
        gates_.push_back({a, b});
        return n_ + gates_.size() - 1;
    }
    std::size_t not_(std::size_t a) { return nand(a, a); }
    std::size_t and_(std::size_t a, std::size_t b) { return not_(nand(a, b)); }
    std::size_t or_(std::size_t a, std::size_t b) { return nand(not_(a), not_(b)); }
    std::size_t xor_(std::size_t a, std::size_t b) {
        const std::size_t t = nand(a, b);
        return nand(nand(a, t), nand(b, t));
    }
    std::size_t const1(std::size_t any) { return nand(any, not_(any)); }
    std::size_t const0(std::size_t any) { return not_(const1(any)); }

    /// Copies `c` with its inputs wired to `inputs`; returns its output wire.
    std::size_t append(const BooleanCircuit& c, const std::vector<std::size_t>& inputs) {
        if (inputs.size() != c.input_count()) throw DomainError("CircuitBuilder::append: input arity mismatch");
        std::vector<std::size_t> map(inputs);
        for (const auto& g : c.gates()) map.push_back(nand(map[g.a], map[g.b]));
        return map[c.output()];
    }

    BooleanCircuit finish(std::size_t output) const { return BooleanCircuit(n_, gates_, output); }

private:
    std::size_t n_;
    std::vector<NandGate> gates_;
};

inline std::vector<std::size_t> wire_range(std::size_t first, std::size_t count) {
    std::vector<std::size_t> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = first + i;
    return out;
}

/// Constant circuits on n >= 1 inputs: const0 has gap 2^n, const1 has -2^n.
inline BooleanCircuit constant_circuit(std::size_t n, bool value) {
    if (n == 0) throw DomainError("constant_circuit: needs at least one input");
    CircuitBuilder b(n);
    return b.finish(value ? b.const1(0) : b.const0(0));
}

/// Adds unused inputs up to m; the gap scales by 2^(m - n).
inline BooleanCircuit pad(const BooleanCircuit& c, std::size_t m) {
    if (m < c.input_count()) throw DomainError("pad: cannot shrink input count");
    CircuitBuilder b(m);
    return b.finish(b.append(c, wire_range(0, c.input_count())));
}

inline BooleanCircuit negate(const BooleanCircuit& c) {
    CircuitBuilder b(c.input_count());
    return b.finish(b.not_(b.append(c, wire_range(0, c.input_count()))));
}

/// C(x, y) = C1(x) xor C2(y) on disjoint inputs; gaps multiply.
inline BooleanCircuit multiply(const BooleanCircuit& c1, const BooleanCircuit& c2) {
    const std::size_t n1 = c1.input_count(), n2 = c2.input_count();
    CircuitBuilder b(n1 + n2);
    const std::size_t u = b.append(c1, wire_range(0, n1));
    const std::size_t v = b.append(c2, wire_range(n1, n2));
    return b.finish(b.xor_(u, v));
}

/// C(x, s) = s ? C2(x) : C1(x) with the selector last; gaps add. Both
/// operands must have the same input count (use pad explicitly).
inline BooleanCircuit add(const BooleanCircuit& c1, const BooleanCircuit& c2) {
    const std::size_t n = c1.input_count();
    if (c2.input_count() != n)
        throw DomainError("add: input counts differ (" + std::to_string(n) + " vs " +
                          std::to_string(c2.input_count()) + "); pad explicitly");
    CircuitBuilder b(n + 1);
    const std::size_t s = n;
    const std::size_t u = b.append(c1, wire_range(0, n));
    const std::size_t v = b.append(c2, wire_range(0, n));
    return b.finish(b.nand(b.nand(u, b.not_(s)), b.nand(v, s)));
}

enum class CombineKind { Negate, Add, Multiply };

inline BooleanCircuit combine(CombineKind kind, const BooleanCircuit& c1, const std::optional<BooleanCircuit>& c2 = {}) {
    if (kind == CombineKind::Negate) return negate(c1);
    if (!c2) throw DomainError("combine: second operand required");
    return kind == CombineKind::Add ? add(c1, *c2) : multiply(c1, *c2);
}

/// [y >= t] on m inputs, input 0 most significant; gap 2t - 2^m.
inline BooleanCircuit comparator_ge(std::size_t m, const Integer& t) {
    if (m == 0 || m > 62) throw DomainError("comparator_ge: unsupported width");
    const Integer top = Integer(1) << m;
    if (t < 0 || t > top) throw DomainError("comparator_ge: threshold out of range");
    CircuitBuilder b(m);
    if (t == 0) return b.finish(b.const1(0));
    if (t == top) return b.finish(b.const0(0));
    const auto tv = t.convert_to<std::uint64_t>();
    std::size_t ge = b.const1(0);
    for (std::size_t k = 0; k < m; ++k) {  // k-th least significant bit
        const std::size_t wire = m - 1 - k;
        ge = ((tv >> k) & 1u) ? b.and_(wire, ge) : b.or_(wire, ge);
    }
    return b.finish(ge);
}

/// A circuit whose gap equals 2^scale_log2 times the intended value.
struct ScaledCircuit {
    BooleanCircuit circuit;
    unsigned scale_log2 = 0;
};

/// Gap Delta_c - k, up to the recorded power-of-two scale. Circuits with at
/// least one input have even gaps, so odd k costs one extra input and a
/// factor 2. Requires n >= 1 and |k| <= 2^n.
inline ScaledCircuit shift(const BooleanCircuit& c, const Integer& k) {
    const std::size_t n = c.input_count();
    if (n == 0) throw DomainError("shift: circuit needs at least one input");
    if (n > 60) throw DomainError("shift: input count too large");
    if (abs(k) > (Integer(1) << n)) throw DomainError("shift: |k| exceeds 2^n");
    if (k == 0) return {c, 0};
    const bool odd = (k % 2) != 0;
    const std::size_t m = odd ? n + 1 : n;
    // D = [y >= t] has gap 2t - 2^m = -2^(m-n) k.
    const Integer t = (Integer(1) << (m - 1)) - ((Integer(1) << (m - n)) * k) / 2;
    return {add(pad(c, m), comparator_ge(m, t)), odd ? 1u : 0u};
}

/// C'(x, b) = C(x) and not b, so Delta_C' = Delta_C + 2^n >= 0.
inline BooleanCircuit or_extend(const BooleanCircuit& c) {
    const std::size_t n = c.input_count();
    CircuitBuilder b(n + 1);
    const std::size_t u = b.append(c, wire_range(0, n));
    return b.finish(b.and_(u, b.not_(n)));
}

}  // namespace permhard
