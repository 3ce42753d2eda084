#include "relinfo/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <string_view>

#include "relinfo/errors.hpp"

namespace relinfo::catalog {

namespace {

constexpr std::string_view kOrbitalLetters = "spdfghiklm";

void check_n_max(int n_max) {
    if (n_max < 1 || n_max > kMaxCatalogN) {
        throw DomainError("n_max must be in [1, " + std::to_string(kMaxCatalogN) + "], got " + std::to_string(n_max));
    }
}

} // namespace

bool canonical_less(const QuantumState& a, const QuantumState& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    if (a.l() != b.l()) return a.l() < b.l();
    if (a.j() != b.j()) return a.j() < b.j();
    return a.m_j() < b.m_j();
}

std::vector<QuantumState> all_states(int n_max) {
    check_n_max(n_max);
    std::vector<QuantumState> out;
    for (int n = 1; n <= n_max; ++n) {
        for (int l = 0; l < n; ++l) {
            for (int twice_j : {2 * l - 1, 2 * l + 1}) {
                if (twice_j < 1) continue;
                for (int twice_m = -twice_j; twice_m <= twice_j; twice_m += 2) {
                    out.push_back(QuantumState::from_nljm(n, l, HalfInteger::from_twice(twice_j),
                                                          HalfInteger::from_twice(twice_m)));
                }
            }
        }
    }
    return out;
}

std::vector<QuantumState> stretched_states(int n_max) {
    auto states = all_states(n_max);
    std::erase_if(states, [](const QuantumState& s) { return s.m_j() != s.j(); });
    return states;
}

HalfInteger parse_half_integer(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) throw DomainError("trailing characters");
            return HalfInteger::from_double(v);
        }
        std::size_t used = 0;
        const int num = std::stoi(text.substr(0, slash), &used);
        if (used != slash || text.substr(slash + 1) != "2") throw DomainError("denominator must be 2");
        return HalfInteger::from_twice(num);
    } catch (const DomainError&) {
        throw DomainError("'" + text + "' is not a half-integer");
    } catch (const std::exception&) {
        throw DomainError("'" + text + "' is not a half-integer");
    }
}

QuantumState parse_spectroscopic(const std::string& label) {
    static const std::regex pattern(R"(^\s*(\d+)([a-zA-Z])(-?)(?::(\S+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(label, m, pattern)) {
        throw DomainError("cannot parse state label '" + label + "' (expected e.g. 2s, 3p-, 3d:3/2)");
    }
    const int n = std::stoi(m[1].str());
    const char letter = static_cast<char>(std::tolower(static_cast<unsigned char>(m[2].str()[0])));
    const auto pos = kOrbitalLetters.find(letter);
    if (pos == std::string_view::npos) throw DomainError("unknown orbital letter in '" + label + "'");
    const int l = static_cast<int>(pos);
    const bool lower = m[3].matched && m[3].length() > 0;
    if (lower && l == 0) throw DomainError("'" + label + "': s states have only j = 1/2");
    const HalfInteger j = HalfInteger::from_twice(lower ? 2 * l - 1 : 2 * l + 1);
    const HalfInteger m_j = m[4].matched ? parse_half_integer(m[4].str()) : j;
    return QuantumState::from_nljm(n, l, j, m_j);
}

std::vector<double> linear_grid(double from, double to, int steps) {
    if (steps < 1) throw DomainError("grid needs at least one point");
    if (steps == 1) return {from};
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = from + (to - from) * i / (steps - 1);
    out.back() = to;
    return out;
}

std::vector<double> log_grid(double from, double to, int steps) {
    if (!(from > 0.0) || !(to > 0.0)) throw DomainError("logarithmic grid needs positive bounds");
    auto out = linear_grid(std::log(from), std::log(to), steps);
    for (auto& v : out) v = std::exp(v);
    out.front() = from;
    if (steps > 1) out.back() = to;
    return out;
}

} // namespace relinfo::catalog
