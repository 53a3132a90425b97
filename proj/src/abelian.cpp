#include "coarse/abelian.hpp"

#include <algorithm>
#include <stdexcept>

#include "coarse/snf.hpp"

namespace coarse {

AbelianGroupFG canonical_group(int rank, std::vector<Integer> orders) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    std::vector<Integer> chain;
    for (Integer& d : orders) {
        if (d < 0) d = -d;
        if (d == 0) {
            ++rank;  // a zero order is a free summand
        } else if (d > 1) {
            chain.push_back(d);
        }
    }
    // Replace pairs by (gcd, lcm) until the chain is divisor-sorted.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            for (std::size_t j = i + 1; j < chain.size(); ++j) {
                if (chain[j] % chain[i] == 0) continue;
                Integer g = boost::multiprecision::gcd(chain[i], chain[j]);
                Integer l = chain[i] / g * chain[j];
                chain[i] = g;
                chain[j] = l;
                changed = true;
            }
        }
    }
    chain.erase(std::remove(chain.begin(), chain.end(), Integer(1)), chain.end());
    std::sort(chain.begin(), chain.end());
    return {rank, std::move(chain)};
}

AbelianGroupFG direct_sum(const AbelianGroupFG& a, const AbelianGroupFG& b) {
    std::vector<Integer> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return canonical_group(a.rank + b.rank, std::move(orders));
}

AbelianGroupFG power_group(const AbelianGroupFG& a, int e) {
    if (e < 0) throw std::invalid_argument("negative power");
    std::vector<Integer> orders;
    orders.reserve(a.torsion.size() * static_cast<std::size_t>(e));
    for (int k = 0; k < e; ++k) orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
    return canonical_group(a.rank * e, std::move(orders));
}

AbelianGroupFG tensor_group(const AbelianGroupFG& a, const AbelianGroupFG& b) {
    std::vector<Integer> orders;
    for (const Integer& d : a.torsion) {
        for (int k = 0; k < b.rank; ++k) orders.push_back(d);
    }
    for (const Integer& e : b.torsion) {
        for (int k = 0; k < a.rank; ++k) orders.push_back(e);
    }
    for (const Integer& d : a.torsion) {
        for (const Integer& e : b.torsion) orders.push_back(boost::multiprecision::gcd(d, e));
    }
    return canonical_group(a.rank * b.rank, std::move(orders));
}

AbelianGroupFG tor_group(const AbelianGroupFG& a, const AbelianGroupFG& b) {
    std::vector<Integer> orders;
    for (const Integer& d : a.torsion) {
        for (const Integer& e : b.torsion) orders.push_back(boost::multiprecision::gcd(d, e));
    }
    return canonical_group(0, std::move(orders));
}

AbelianGroupFG universal_coefficients(const AbelianGroupFG& hk_z, const AbelianGroupFG& hk1_z,
                                      const AbelianGroupFG& coeff) {
    return direct_sum(tensor_group(hk_z, coeff), tor_group(hk1_z, coeff));
}

std::string group_name(const AbelianGroupFG& g) {
    if (g.trivial()) return "0";
    std::string out;
    if (g.rank == 1) {
        out = "Z";
    } else if (g.rank > 1) {
        out = "Z^" + std::to_string(g.rank);
    }
    for (const Integer& d : g.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.str();
    }
    return out;
}

AbelianGroupFG parse_group(const std::string& text) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto parse_int = [&]() -> Integer {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw std::invalid_argument("expected a number in group expression: " + text);
        return Integer(text.substr(start, pos - start));
    };

    skip_space();
    if (text.substr(pos, 1) == "0") {
        ++pos;
        skip_space();
        if (pos != text.size()) throw std::invalid_argument("trailing input after 0: " + text);
        return trivial_group();
    }

    int rank = 0;
    std::vector<Integer> orders;
    while (true) {
        skip_space();
        if (pos >= text.size() || text[pos] != 'Z') {
            throw std::invalid_argument("expected Z in group expression: " + text);
        }
        ++pos;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            Integer e = parse_int();
            if (e < 1 || e > 4096) throw std::invalid_argument("rank out of range: " + text);
            rank += static_cast<int>(e);
        } else if (pos < text.size() && text[pos] == '/') {
            ++pos;
            Integer d = parse_int();
            if (d < 2) throw std::invalid_argument("torsion order must be at least 2: " + text);
            orders.push_back(d);
        } else {
            rank += 1;
        }
        skip_space();
        if (pos == text.size()) break;
        if (text[pos] != '+') throw std::invalid_argument("expected + in group expression: " + text);
        ++pos;
    }
    return canonical_group(rank, std::move(orders));
}

}  // namespace coarse
