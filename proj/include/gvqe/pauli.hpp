#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gvqe/errors.hpp"
#include "gvqe/matrix.hpp"

namespace gvqe {

// Phase convention used throughout: Y = [[0, i], [-i, 0]], i.e. the complex
// conjugate of the textbook matrix, so that single-qubit products reduce as
// Z*X = -iY, X*Y = -iZ, Y*Z = -iX (and reversed order flips the sign). Under
// this convention the four 2x2 single-entry constructors are
//   [[1,0],[0,0]] = (I+Z)/2          [[0,1],[0,0]] = (X - iY)/2
//   [[0,0],[1,0]] = (X + iY)/2       [[0,0],[0,1]] = (I-Z)/2
// and decompositions of real matrices conjugate-match the textbook ones.
inline constexpr double kCoeffEps = 1e-14;

inline constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

// One summand: coefficient times a tensor word over {I, X, Y, Z}. The word is
// written most-significant qubit first, matching tensor-product order, so
// qubit q of an n-qubit word is word[n - 1 - q].
struct PauliTerm {
    std::complex<double> coeff;
    std::string word;
};

struct PauliSum {
    int n_qubits = 0;
    std::vector<PauliTerm> terms;
};

namespace detail {

inline void check_word(const std::string& w, int n_qubits) {
    if (static_cast<int>(w.size()) != n_qubits)
        throw DomainError("Pauli word length does not match qubit count");
    for (char c : w)
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
            throw DomainError(std::string("invalid Pauli letter: ") + c);
}

// Quadrant recursion: a 2^k x 2^k block decomposes as
// C1 (x) A + C2 (x) B + C3 (x) C + C4 (x) D over its four half-size quadrants,
// bottoming out at single entries. The result is the dense coefficient array
// indexed by base-4 word index (digit q = letter of qubit q).
inline std::vector<std::complex<double>> decompose_block(const SquareMatrix& m, std::size_t r0,
                                                         std::size_t c0, std::size_t size) {
    if (size == 1) return {std::complex<double>(m.at(r0, c0), 0.0)};
    const std::size_t h = size / 2;
    const auto a = decompose_block(m, r0, c0, h);
    const auto b = decompose_block(m, r0, c0 + h, h);
    const auto c = decompose_block(m, r0 + h, c0, h);
    const auto d = decompose_block(m, r0 + h, c0 + h, h);
    const std::size_t block = a.size();
    std::vector<std::complex<double>> out(4 * block);
    const std::complex<double> half_i(0.0, 0.5);
    for (std::size_t w = 0; w < block; ++w) {
        out[0 * block + w] = 0.5 * (a[w] + d[w]);           // I
        out[1 * block + w] = 0.5 * (b[w] + c[w]);           // X
        out[2 * block + w] = half_i * (c[w] - b[w]);        // Y
        out[3 * block + w] = 0.5 * (a[w] - d[w]);           // Z
    }
    return out;
}

inline std::string word_from_index(std::size_t idx, int n_qubits) {
    std::string w(static_cast<std::size_t>(n_qubits), 'I');
    for (int j = 0; j < n_qubits; ++j)
        w[static_cast<std::size_t>(j)] = kLetters[(idx >> (2 * (n_qubits - 1 - j))) & 3u];
    return w;
}

struct WordMasks {
    std::uint64_t flip = 0;       // X or Y positions: column = row ^ flip
    std::uint64_t phase_yz = 0;   // Y or Z positions: sign = (-1)^popcount(row & phase_yz)
    std::complex<double> y_phase = 1.0;  // i^(#Y)
};

inline WordMasks masks_for(const std::string& word) {
    static constexpr std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    WordMasks m;
    const int n = static_cast<int>(word.size());
    int ny = 0;
    for (int q = 0; q < n; ++q) {
        switch (word[static_cast<std::size_t>(n - 1 - q)]) {
            case 'X': m.flip |= 1ull << q; break;
            case 'Y':
                m.flip |= 1ull << q;
                m.phase_yz |= 1ull << q;
                ++ny;
                break;
            case 'Z': m.phase_yz |= 1ull << q; break;
            default: break;
        }
    }
    m.y_phase = ipow[ny & 3];
    return m;
}

}  // namespace detail

// Like-term merge, drop of |coeff| < 1e-14, canonical lexicographic order
// (I < X < Y < Z, most-significant qubit first). Reconstruction is invariant
// under simplification.
inline PauliSum simplify(const PauliSum& s) {
    for (const auto& t : s.terms) detail::check_word(t.word, s.n_qubits);
    std::vector<PauliTerm> sorted = s.terms;
    std::sort(sorted.begin(), sorted.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.word < b.word; });
    PauliSum out{s.n_qubits, {}};
    for (const auto& t : sorted) {
        if (!out.terms.empty() && out.terms.back().word == t.word)
            out.terms.back().coeff += t.coeff;
        else
            out.terms.push_back(t);
        if (!out.terms.empty() && std::abs(out.terms.back().coeff) < kCoeffEps) out.terms.pop_back();
    }
    return out;
}

// Compiles a real 2^n x 2^n matrix into its canonical Pauli sum via the
// quadrant recursion. The result reconstructs the input exactly (up to
// floating-point rounding) and is already simplified.
inline PauliSum pauli_decompose(const SquareMatrix& m) {
    const int n = static_cast<int>(std::countr_zero(m.dim));
    const auto coeffs = detail::decompose_block(m, 0, 0, m.dim);
    PauliSum out{n, {}};
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx)
        if (std::abs(coeffs[idx]) >= kCoeffEps)
            out.terms.push_back({coeffs[idx], detail::word_from_index(idx, n)});
    return out;  // ascending word index == canonical lexicographic order
}

// Laplacian sum from an adjacency sum: P(L) = -P(A) + sum_i deg(v_i) P(1_i),
// where P(1_i) expands over {I, Z} words. The diagonal part is obtained with
// one Walsh-Hadamard transform of the degree vector.
inline PauliSum pauli_laplacian(const PauliSum& adjacency, const std::vector<int>& degrees) {
    const std::size_t dim = std::size_t{1} << adjacency.n_qubits;
    if (degrees.size() != dim)
        throw DomainError("degree sequence length must equal the padded matrix dimension");
    std::vector<double> wht(degrees.begin(), degrees.end());
    for (std::size_t half = 1; half < dim; half *= 2)
        for (std::size_t base = 0; base < dim; base += 2 * half)
            for (std::size_t k = base; k < base + half; ++k) {
                const double lo = wht[k], hi = wht[k + half];
                wht[k] = lo + hi;
                wht[k + half] = lo - hi;
            }
    PauliSum combined{adjacency.n_qubits, {}};
    for (const auto& t : adjacency.terms) combined.terms.push_back({-t.coeff, t.word});
    const double scale = 1.0 / static_cast<double>(dim);
    for (std::size_t zmask = 0; zmask < dim; ++zmask) {
        if (wht[zmask] == 0.0) continue;
        std::string w(static_cast<std::size_t>(adjacency.n_qubits), 'I');
        for (int q = 0; q < adjacency.n_qubits; ++q)
            if (zmask >> q & 1u) w[static_cast<std::size_t>(adjacency.n_qubits - 1 - q)] = 'Z';
        combined.terms.push_back({wht[zmask] * scale, w});
    }
    return simplify(combined);
}

// Single-qubit product table under the conjugated-Y convention; returns the
// phase and resulting letter of (a * b) in operator order.
inline std::pair<std::complex<double>, char> multiply_letters(char a, char b) {
    auto idx = [](char c) -> int {
        switch (c) {
            case 'I': return 0;
            case 'X': return 1;
            case 'Y': return 2;
            case 'Z': return 3;
        }
        throw DomainError(std::string("invalid Pauli letter: ") + c);
    };
    const int ia = idx(a), ib = idx(b);
    if (ia == 0) return {1.0, b};
    if (ib == 0) return {1.0, a};
    if (ia == ib) return {1.0, 'I'};
    // remaining letter of the triple {X, Y, Z}
    const char rest = kLetters[6 - ia - ib];
    // forward cycle X->Y->Z->X carries -i, the reverse carries +i
    const bool forward = (ib - ia + 3) % 3 == 1;
    return {std::complex<double>(0.0, forward ? -1.0 : 1.0), rest};
}

inline PauliTerm multiply_terms(const PauliTerm& a, const PauliTerm& b) {
    if (a.word.size() != b.word.size()) throw DomainError("Pauli word length mismatch");
    PauliTerm out{a.coeff * b.coeff, std::string(a.word.size(), 'I')};
    for (std::size_t k = 0; k < a.word.size(); ++k) {
        auto [phase, letter] = multiply_letters(a.word[k], b.word[k]);
        out.coeff *= phase;
        out.word[k] = letter;
    }
    return out;
}

// Dense reconstruction, the round-trip verification oracle. Guarded by a
// qubit cap since the output is 4^n entries.
inline ComplexMatrix pauli_to_matrix(const PauliSum& s, int max_qubits = 10) {
    if (s.n_qubits > max_qubits)
        throw ResourceError("reconstruction cap exceeded: " + std::to_string(s.n_qubits) +
                            " qubits > cap " + std::to_string(max_qubits));
    const std::size_t dim = std::size_t{1} << s.n_qubits;
    ComplexMatrix m(dim);
    for (const auto& t : s.terms) {
        detail::check_word(t.word, s.n_qubits);
        const auto wm = detail::masks_for(t.word);
        for (std::size_t r = 0; r < dim; ++r) {
            const double sign = (std::popcount(r & wm.phase_yz) & 1) ? -1.0 : 1.0;
            m.at(r, r ^ wm.flip) += t.coeff * wm.y_phase * sign;
        }
    }
    return m;
}

struct GateCost {
    std::size_t term_count = 0;
    int max_locality = 0;
    long long gate_estimate = 0;
};

// Circuit-cost accounting for a simplified sum: locality k term costs 4k - 1
// (basis changes, entangler ladder down and up, one rotation), the identity
// term costs 1.
inline GateCost gate_cost(const PauliSum& s) {
    GateCost g;
    g.term_count = s.terms.size();
    for (const auto& t : s.terms) {
        const int k = static_cast<int>(t.word.size() - std::count(t.word.begin(), t.word.end(), 'I'));
        g.max_locality = std::max(g.max_locality, k);
        g.gate_estimate += k >= 1 ? 4LL * k - 1 : 1LL;
    }
    return g;
}

// Formats like "1.0", "-0.5", "0.25": shortest form that still shows the
// decimal point.
inline std::string format_real(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s(buf);
    if (s.find_first_of(".einf") == std::string::npos) s += ".0";
    return s;
}

// One term per line: "(<re>,<im>) <letters>".
inline std::string render_text(const PauliSum& s) {
    std::string out;
    for (const auto& t : s.terms) {
        out += "(" + format_real(t.coeff.real()) + "," + format_real(t.coeff.imag()) + ") ";
        out += t.word;
        out += '\n';
    }
    return out;
}

inline nlohmann::json to_json(const PauliSum& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : s.terms)
        terms.push_back({{"re", t.coeff.real()}, {"im", t.coeff.imag()}, {"word", t.word}});
    return {{"n_qubits", s.n_qubits}, {"terms", terms}};
}

}  // namespace gvqe
