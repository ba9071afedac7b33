#pragma once

// NAND netlists, their gap Delta_C = sum_x (-1)^C(x), and the text format.

#include "permhard/algebra/rational.hpp"
#include "permhard/error.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace permhard {

struct NandGate {
    std::size_t a = 0;
    std::size_t b = 0;
    friend bool operator==(const NandGate&, const NandGate&) = default;
};

/// Wires 0..n-1 are inputs; gate k drives wire n + k.
class BooleanCircuit {
public:
    BooleanCircuit() = default;
    BooleanCircuit(std::size_t inputs, std::vector<NandGate> gates, std::size_t output,
                   std::vector<std::string> names = {})
        : n_(inputs), gates_(std::move(gates)), output_(output), names_(std::move(names)) {
        for (std::size_t k = 0; k < gates_.size(); ++k) {
            if (gates_[k].a >= n_ + k || gates_[k].b >= n_ + k)
                throw DomainError("BooleanCircuit: gate " + std::to_string(k) + " is not topologically ordered");
        }
        if (output_ >= wire_count()) throw DomainError("BooleanCircuit: output wire out of range");
        if (!names_.empty() && names_.size() != wire_count()) throw DomainError("BooleanCircuit: name table size");
    }

    std::size_t input_count() const noexcept { return n_; }
    std::size_t gate_count() const noexcept { return gates_.size(); }
    std::size_t wire_count() const noexcept { return n_ + gates_.size(); }
    const std::vector<NandGate>& gates() const noexcept { return gates_; }
    std::size_t output() const noexcept { return output_; }

    std::string wire_name(std::size_t w) const {
        if (!names_.empty()) return names_[w];
        return w < n_ ? "x" + std::to_string(w) : "g" + std::to_string(w - n_);
    }

    friend bool operator==(const BooleanCircuit& a, const BooleanCircuit& b) {
        return a.n_ == b.n_ && a.gates_ == b.gates_ && a.output_ == b.output_;
    }

    bool eval(const std::vector<bool>& x) const {
        if (x.size() != n_) throw DomainError("eval: expected " + std::to_string(n_) + " inputs, got " + std::to_string(x.size()));
        std::vector<bool> w(x);
        w.reserve(wire_count());
        for (const auto& g : gates_) w.push_back(!(w[g.a] && w[g.b]));
        return w[output_];
    }

    /// Evaluates 64 assignments at once; lane j carries assignment base + j,
    /// where input i takes bit i of the assignment index.
    std::uint64_t eval_block(std::uint64_t base, std::vector<std::uint64_t>& scratch) const {
        static constexpr std::uint64_t kLaneMasks[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull,
                                                       0xF0F0F0F0F0F0F0F0ull, 0xFF00FF00FF00FF00ull,
                                                       0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
        scratch.resize(wire_count());
        for (std::size_t i = 0; i < n_; ++i)
            scratch[i] = i < 6 ? kLaneMasks[i] : (((base >> i) & 1u) ? ~0ull : 0ull);
        for (std::size_t k = 0; k < gates_.size(); ++k) scratch[n_ + k] = ~(scratch[gates_[k].a] & scratch[gates_[k].b]);
        return scratch[output_];
    }

private:
    std::size_t n_ = 0;
    std::vector<NandGate> gates_;
    std::size_t output_ = 0;
    std::vector<std::string> names_;
};

inline constexpr std::size_t kDeltaEnumerationGuard = 24;

/// Exact gap by enumeration over all 2^n assignments.
inline Integer delta_bruteforce(const BooleanCircuit& c) {
    const std::size_t n = c.input_count();
    if (n > kDeltaEnumerationGuard)
        throw GuardError("delta-enumeration", "n = " + std::to_string(n) + " > " + std::to_string(kDeltaEnumerationGuard));
    std::vector<std::uint64_t> scratch;
    const std::uint64_t total = 1ull << n;
    const std::uint64_t lanes_mask = total >= 64 ? ~0ull : ((1ull << total) - 1);
    std::int64_t ones = 0;
    for (std::uint64_t base = 0; base < total; base += 64)
        ones += __builtin_popcountll(c.eval_block(base, scratch) & lanes_mask);
    return Integer(static_cast<std::int64_t>(total) - 2 * ones);
}

inline int sign_of(const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Netlist text: `input`, `gate <name> = NAND(<a>, <b>)`, one `output`.
inline BooleanCircuit parse_netlist(const std::string& text) {
    static const std::regex kName("[A-Za-z_][A-Za-z0-9_]*");
    static const std::regex kInput(R"(^\s*input\s+([A-Za-z_][A-Za-z0-9_]*)\s*$)");
    static const std::regex kOutput(R"(^\s*output\s+([A-Za-z_][A-Za-z0-9_]*)\s*$)");
    static const std::regex kGate(
        R"(^\s*gate\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*NAND\s*\(\s*([A-Za-z_][A-Za-z0-9_]*)\s*,\s*([A-Za-z_][A-Za-z0-9_]*)\s*\)\s*$)");

    struct GateLine {
        std::string name, a, b;
        std::size_t line;
    };
    std::vector<std::string> inputs;
    std::vector<GateLine> gate_lines;
    std::optional<std::pair<std::string, std::size_t>> output;
    std::map<std::string, std::size_t> declared_at;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::smatch m;
        auto declare = [&](const std::string& name) {
            if (declared_at.count(name)) throw ParseError(line_no, "wire '" + name + "' declared twice");
            declared_at[name] = line_no;
        };
        if (std::regex_match(line, m, kInput)) {
            if (!gate_lines.empty()) throw ParseError(line_no, "input declarations must precede gates");
            declare(m[1]);
            inputs.push_back(m[1]);
        } else if (std::regex_match(line, m, kGate)) {
            declare(m[1]);
            gate_lines.push_back({m[1], m[2], m[3], line_no});
        } else if (std::regex_match(line, m, kOutput)) {
            if (output) throw ParseError(line_no, "more than one output declaration");
            output = std::make_pair(std::string(m[1]), line_no);
        } else {
            throw ParseError(line_no, "syntax error: '" + line + "'");
        }
    }
    if (!output) throw ParseError(line_no, "missing output declaration");

    std::map<std::string, std::size_t> wire;
    std::vector<std::string> names = inputs;
    for (std::size_t i = 0; i < inputs.size(); ++i) wire[inputs[i]] = i;
    std::vector<NandGate> gates;
    auto resolve = [&](const std::string& name, std::size_t line) {
        auto it = wire.find(name);
        if (it != wire.end()) return it->second;
        if (declared_at.count(name)) throw ParseError(line, "forward reference to wire '" + name + "'");
        throw ParseError(line, "undeclared wire '" + name + "'");
    };
    for (const auto& g : gate_lines) {
        gates.push_back({resolve(g.a, g.line), resolve(g.b, g.line)});
        wire[g.name] = inputs.size() + gates.size() - 1;
        names.push_back(g.name);
    }
    const auto out_it = wire.find(output->first);
    if (out_it == wire.end()) throw ParseError(output->second, "undeclared output wire '" + output->first + "'");
    return BooleanCircuit(inputs.size(), std::move(gates), out_it->second, std::move(names));
}

inline std::string print_netlist(const BooleanCircuit& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.input_count(); ++i) os << "input " << c.wire_name(i) << "\n";
    for (std::size_t k = 0; k < c.gate_count(); ++k) {
        const auto& g = c.gates()[k];
        os << "gate " << c.wire_name(c.input_count() + k) << " = NAND(" << c.wire_name(g.a) << ", "
           << c.wire_name(g.b) << ")\n";
    }
    os << "output " << c.wire_name(c.output()) << "\n";
    return os.str();
}

}  // namespace permhard
