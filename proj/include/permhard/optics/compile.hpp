#pragma once

// Compiler from lowered qubit circuits to real orthogonal optical networks,
// and the certificate Per(O) = 2^a 3^b Delta_C.

#include "permhard/algebra/ext_field.hpp"
#include "permhard/circuits/boolean_circuit.hpp"
#include "permhard/optics/gadgets.hpp"
#include "permhard/qsim/lower.hpp"
#include "permhard/qsim/oracle.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace permhard {

struct GadgetPlacement {
    std::string gadget;  // "E", "V", "D", or a single-qubit gate name
    std::vector<std::size_t> modes;
    friend bool operator==(const GadgetPlacement&, const GadgetPlacement&) = default;
};

template <class R>
struct OpticalNetwork {
    Matrix<R> matrix;
    std::vector<GadgetPlacement> provenance;

    std::size_t dimension() const { return matrix.rows(); }
};

struct CompiledCircuit {
    OpticalNetwork<QAlpha> network;
    QubitCircuit padded;  // the lowered circuit after parity padding
    std::size_t p = 0;
    std::size_t gamma = 0;
};

/// Mode layout. Qubit i owns (rail1, rail0, dump, encoder) = 4i .. 4i+3;
/// CSIGN k owns the ancilla pair 4p + 2k, 4p + 2k + 1.
struct ModeLayout {
    std::size_t qubits = 0;
    static std::size_t rail1(std::size_t q) { return 4 * q; }
    static std::size_t rail0(std::size_t q) { return 4 * q + 1; }
    static std::size_t dump(std::size_t q) { return 4 * q + 2; }
    static std::size_t encoder(std::size_t q) { return 4 * q + 3; }
    std::size_t ancilla(std::size_t k) const { return 4 * qubits + 2 * k; }
};

/// Pads to an even qubit count of at least 2, then prepends CSIGN(0, 1)
/// until the CSIGN count is even and at least 2. Qubits start in |0>, so
/// the prepended gates act trivially.
inline QubitCircuit pad_for_compile(const QubitCircuit& qc) {
    std::size_t p = qc.qubit_count();
    if (p < 2) p = 2;
    if (p % 2) ++p;
    QubitCircuit out(p);
    std::size_t gamma = qc.count(GateKind::CSIGN);
    std::size_t extra = gamma == 0 ? 2 : gamma % 2;
    for (std::size_t i = 0; i < extra; ++i) out.push(gate2(GateKind::CSIGN, 0, 1));
    for (const auto& g : qc.gates()) out.push(g);
    return out;
}

namespace detail {

/// rows(modes) of `m` <- block * rows(modes): left multiplication by the
/// embedding of `block`.
inline void apply_on_modes(QMatrix& m, const QMatrix& block, const std::vector<std::size_t>& modes) {
    const std::size_t k = modes.size();
    const std::size_t cols = m.cols();
    std::vector<QAlpha> old(k * cols);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < cols; ++c) old[r * cols + c] = m(modes[r], c);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            QAlpha acc(0);
            for (std::size_t s = 0; s < k; ++s) {
                const QAlpha& b = block(r, s);
                const QAlpha& o = old[s * cols + c];
                if (!b.is_zero() && !o.is_zero()) acc += b * o;
            }
            m(modes[r], c) = acc;
        }
}

}  // namespace detail

/// Network O with Per(O) = c^Gamma (-1/sqrt6)^p <0|Q|0>, c = (1/3)sqrt(2/3),
/// where Q is `qc` after padding.
inline CompiledCircuit compile(const QubitCircuit& qc) {
    if (!qc.is_lowered()) throw DomainError("compile: circuit contains CNOT or TOFFOLI; lower it first");
    CompiledCircuit out;
    out.padded = pad_for_compile(qc);
    out.p = out.padded.qubit_count();
    out.gamma = out.padded.count(GateKind::CSIGN);
    const ModeLayout layout{out.p};
    const std::size_t m = 4 * out.p + 2 * out.gamma;
    QMatrix o = QMatrix::identity(m, QAlpha(0));
    auto place = [&](const std::string& name, const QMatrix& block, std::vector<std::size_t> modes) {
        detail::apply_on_modes(o, block, modes);
        out.network.provenance.push_back({name, std::move(modes)});
    };
    const QMatrix e = gadget_e(), v = gadget_v(), d = gadget_d();
    for (std::size_t q = 0; q < out.p; ++q)
        place("E", e, {layout.rail1(q), layout.dump(q), layout.encoder(q)});
    std::size_t csign = 0;
    for (const auto& g : out.padded.gates()) {
        if (g.kind == GateKind::CSIGN) {
            const std::size_t anc = layout.ancilla(csign++);
            place("V", v, {layout.rail1(g.q[0]), layout.rail1(g.q[1]), anc, anc + 1});
        } else {
            // amplitudes (a0, a1) live on (rail0, rail1)
            place(gate_name(g.kind), single_qubit_matrix(g.kind), {layout.rail0(g.q[0]), layout.rail1(g.q[0])});
        }
    }
    for (std::size_t q = 0; q < out.p; ++q) place("D", d, {layout.rail1(q), layout.dump(q)});
    out.network.matrix = std::move(o);
    return out;
}

/// c^Gamma (-1/sqrt6)^p as an exact element.
inline QAlpha compile_scale(std::size_t gamma, std::size_t p) {
    QAlpha s = v_success_amplitude().pow(static_cast<unsigned>(gamma));
    const QAlpha d = -Radicals::inv_sqrt6();
    return s * d.pow(static_cast<unsigned>(p));
}

template <class R>
struct ReductionCertificate {
    OpticalNetwork<R> network;
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t gamma = 0;
    long a = 0;
    long b = 0;
};

using Certificate = ReductionCertificate<QAlpha>;

/// Exponents with c^Gamma (-1/sqrt6)^p / 2^n = 2^a 3^b for even Gamma, p.
inline std::pair<long, long> certificate_exponents(std::size_t gamma, std::size_t p, std::size_t n) {
    if (gamma % 2 || p % 2) throw DomainError("certificate_exponents: Gamma and p must be even");
    const long g = static_cast<long>(gamma), q = static_cast<long>(p), k = static_cast<long>(n);
    return {g / 2 - q / 2 - k, -3 * g / 2 - q / 2};
}

enum class OracleSynthesis {
    Generic,  // one ancilla per NAND gate, Toffoli-based
    Compact,  // ancilla-free for constants and literals, idle qubits pruned
};

/// The lowered circuit Q with <0|Q|0> = Delta_C / 2^n used by certify.
inline QubitCircuit delta_circuit_for(const BooleanCircuit& c, OracleSynthesis mode) {
    if (mode == OracleSynthesis::Generic) return lower(build_delta_circuit(c));
    return prune_idle(lower(build_delta_circuit_compact(c)));
}

/// Runs the delta circuit construction, lowering and compilation, and
/// attaches the exponents a, b.
inline Certificate certify(const BooleanCircuit& c, OracleSynthesis mode = OracleSynthesis::Compact) {
    const CompiledCircuit cc = compile(delta_circuit_for(c, mode));
    Certificate cert;
    cert.network = cc.network;
    cert.n = c.input_count();
    cert.p = cc.p;
    cert.gamma = cc.gamma;
    std::tie(cert.a, cert.b) = certificate_exponents(cc.gamma, cc.p, cert.n);
    return cert;
}

/// Delta_C = Per(O) / (2^a 3^b); throws VerificationError unless the
/// quotient is an integer.
inline Integer extract_delta(const Certificate& cert, const QAlpha& per_value) {
    const QAlpha q = per_value * (Rational(1) / pow23(cert.a, cert.b));
    const auto r = q.as_rational();
    if (!r) throw VerificationError("extract_delta: Per(O) / 2^a 3^b is irrational: " + q.pretty());
    if (denominator_of(*r) != 1)
        throw VerificationError("extract_delta: Per(O) / 2^a 3^b = " + to_string(*r) + " is not an integer");
    return numerator_of(*r);
}

/// Finite-field form: returns Delta_C mod p in [0, p).
inline std::uint64_t extract_delta(const ReductionCertificate<ExtFieldElem>& cert, const ExtFieldElem& per_value) {
    const auto& field = per_value.field();
    const std::uint64_t p = field->p;
    const Rational s = pow23(cert.a, cert.b);
    const PrimeFieldElem inv = PrimeFieldElem::from_rational(s, p).inverse();
    const ExtFieldElem q = per_value * ExtFieldElem::constant(field, inv.residue());
    const auto base = q.as_prime_field();
    if (!base) throw VerificationError("extract_delta: Per(O) / 2^a 3^b does not lie in F_" + std::to_string(p));
    return *base;
}

// ---------------------------------------------------------------------------
// Text format
//
//   permhard-certificate 1
//   ring qalpha                      | ring ext <p> <c0,c1,...>
//   n <n>  p <p>  gamma <G>  a <a>  b <b>   (one key per line)
//   dimension <m>
//   gadgets <k>
//   <name> <mode> <mode> ...         (k lines)
//   matrix
//   <one entry per line, row-major>
//
// Q(alpha) entries are 16 `num/den` tokens, constant term first; extension
// field entries are `[c0,c1,...]`.

namespace detail {

inline void write_header(std::ostream& os, std::size_t n, std::size_t p, std::size_t gamma, long a, long b,
                         std::size_t m, const std::vector<GadgetPlacement>& prov) {
    os << "n " << n << "\np " << p << "\ngamma " << gamma << "\na " << a << "\nb " << b << "\n";
    os << "dimension " << m << "\ngadgets " << prov.size() << "\n";
    for (const auto& g : prov) {
        os << g.gadget;
        for (auto k : g.modes) os << ' ' << k;
        os << '\n';
    }
    os << "matrix\n";
}

class CertificateReader {
public:
    explicit CertificateReader(std::istream& is) : is_(is) {}

    std::string line() {
        std::string s;
        while (std::getline(is_, s)) {
            ++line_no_;
            if (!s.empty() && s.back() == '\r') s.pop_back();
            if (s.empty() || s[0] == '#') continue;
            return s;
        }
        throw ParseError(line_no_, "unexpected end of certificate");
    }

    std::string keyed(const std::string& key) {
        const std::string s = line();
        if (s.rfind(key + " ", 0) != 0) throw ParseError(line_no_, "expected '" + key + " ...', got '" + s + "'");
        return s.substr(key.size() + 1);
    }

    template <class T>
    T number(const std::string& key) {
        std::istringstream ss(keyed(key));
        T v{};
        if (!(ss >> v)) throw ParseError(line_no_, "bad value for '" + key + "'");
        return v;
    }

    std::size_t line_no() const { return line_no_; }

private:
    std::istream& is_;
    std::size_t line_no_ = 0;
};

inline Rational parse_rational_token(const std::string& tok, std::size_t line) {
    try {
        const auto slash = tok.find('/');
        if (slash == std::string::npos) return Rational(Integer(tok));
        return Rational(Integer(tok.substr(0, slash)), Integer(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError(line, "bad rational '" + tok + "'");
    }
}

inline std::vector<long long> parse_coeff_list(const std::string& text, std::size_t line) {
    std::string s = text;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError(line, "expected [c0,c1,...], got '" + s + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<long long> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw ParseError(line, "bad coefficient '" + tok + "'");
        }
    }
    return out;
}

template <class R>
void read_body(CertificateReader& rd, ReductionCertificate<R>& cert, auto&& parse_entry) {
    cert.n = rd.number<std::size_t>("n");
    cert.p = rd.number<std::size_t>("p");
    cert.gamma = rd.number<std::size_t>("gamma");
    cert.a = rd.number<long>("a");
    cert.b = rd.number<long>("b");
    const auto m = rd.number<std::size_t>("dimension");
    if (m != 4 * cert.p + 2 * cert.gamma)
        throw ParseError(rd.line_no(), "dimension " + std::to_string(m) + " != 4p + 2 gamma");
    const auto k = rd.number<std::size_t>("gadgets");
    for (std::size_t i = 0; i < k; ++i) {
        std::istringstream ss(rd.line());
        GadgetPlacement g;
        ss >> g.gadget;
        std::size_t mode;
        while (ss >> mode) {
            if (mode >= m) throw ParseError(rd.line_no(), "gadget mode out of range");
            g.modes.push_back(mode);
        }
        cert.network.provenance.push_back(std::move(g));
    }
    if (rd.line() != "matrix") throw ParseError(rd.line_no(), "expected 'matrix'");
    std::vector<std::vector<R>> rows(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) rows[i].push_back(parse_entry(rd.line(), rd.line_no()));
    cert.network.matrix = Matrix<R>::from_rows(rows);
}

}  // namespace detail

inline void write_certificate(std::ostream& os, const Certificate& cert) {
    os << "permhard-certificate 1\nring qalpha\n";
    detail::write_header(os, cert.n, cert.p, cert.gamma, cert.a, cert.b, cert.network.dimension(),
                         cert.network.provenance);
    const auto& mat = cert.network.matrix;
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) os << mat(i, j).str() << '\n';
}

inline void write_certificate(std::ostream& os, const ReductionCertificate<ExtFieldElem>& cert) {
    const auto& mat = cert.network.matrix;
    if (mat.rows() == 0) throw DomainError("write_certificate: empty network");
    const auto& field = mat(0, 0).field();
    os << "permhard-certificate 1\nring ext " << field->p << ' ' << field->g.str() << '\n';
    detail::write_header(os, cert.n, cert.p, cert.gamma, cert.a, cert.b, cert.network.dimension(),
                         cert.network.provenance);
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) os << mat(i, j).str() << '\n';
}

inline std::string certificate_text(const Certificate& cert) {
    std::ostringstream os;
    write_certificate(os, cert);
    return os.str();
}

inline Certificate read_certificate(std::istream& is) {
    detail::CertificateReader rd(is);
    if (rd.line() != "permhard-certificate 1") throw ParseError(rd.line_no(), "missing 'permhard-certificate 1' header");
    if (rd.keyed("ring") != "qalpha") throw ParseError(rd.line_no(), "only 'ring qalpha' certificates can be read here");
    Certificate cert;
    detail::read_body(rd, cert, [](const std::string& s, std::size_t line) {
        std::istringstream ss(s);
        std::vector<Rational> coeffs;
        std::string tok;
        while (ss >> tok) coeffs.push_back(detail::parse_rational_token(tok, line));
        if (coeffs.size() != QAlpha::kDegree)
            throw ParseError(line, "expected " + std::to_string(QAlpha::kDegree) + " coefficients, got " +
                                       std::to_string(coeffs.size()));
        return QAlpha::from_coefficients(coeffs);
    });
    return cert;
}

inline ReductionCertificate<ExtFieldElem> read_ext_certificate(std::istream& is) {
    detail::CertificateReader rd(is);
    if (rd.line() != "permhard-certificate 1") throw ParseError(rd.line_no(), "missing 'permhard-certificate 1' header");
    std::istringstream ring(rd.keyed("ring"));
    std::string tag, glist;
    std::uint64_t p = 0;
    if (!(ring >> tag >> p >> glist) || tag != "ext") throw ParseError(rd.line_no(), "expected 'ring ext <p> [g]'");
    const auto gc = detail::parse_coeff_list(glist, rd.line_no());
    const auto field = make_ext_field(PolyOverFp::from_signed(gc, p));
    ReductionCertificate<ExtFieldElem> cert;
    detail::read_body(rd, cert, [&](const std::string& s, std::size_t line) {
        return ExtFieldElem(field, PolyOverFp::from_signed(detail::parse_coeff_list(s, line), p));
    });
    return cert;
}

}  // namespace permhard
