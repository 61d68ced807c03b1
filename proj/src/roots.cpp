#include "cmlax/roots.hpp"

#include <algorithm>
#include <map>

namespace cmlax {

std::vector<Vec> RootSystem::positive_roots() const {
    std::vector<Vec> r;
    r.reserve(positive.size());
    for (auto i : positive) r.push_back(roots[i]);
    return r;
}

std::vector<Vec> RootSystem::simple_roots() const {
    std::vector<Vec> r;
    r.reserve(simple.size());
    for (auto i : simple) r.push_back(roots[i]);
    return r;
}

bool RootSystem::contains(const Vec& v) const {
    return std::find(roots.begin(), roots.end(), v) != roots.end();
}

Vec default_ordering_vector(std::size_t dim, unsigned long base) {
    Vec v(dim);
    mpq_class p = 1;
    for (std::size_t j = dim; j > 0; --j) {
        p *= base;
        v[j - 1] = p;
    }
    return v;
}

Vec coroot(const Vec& alpha) {
    mpq_class nn = dot(alpha, alpha);
    return (2 / nn) * alpha;
}

namespace {

void push_pm(std::vector<Vec>& roots, const Vec& v) {
    roots.push_back(v);
    roots.push_back(mpq_class(-1) * v);
}

Vec unit(std::size_t d, std::size_t i, const mpq_class& c = 1) {
    Vec v(d, 0);
    v[i] = c;
    return v;
}

std::vector<Vec> type_a_roots(int rank) {
    std::size_t d = rank + 1;
    std::vector<Vec> r;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) push_pm(r, unit(d, i) - unit(d, j));
    return r;
}

std::vector<Vec> type_bc_roots(int rank, bool c_type) {
    std::size_t d = rank;
    std::vector<Vec> r;
    for (std::size_t i = 0; i < d; ++i) push_pm(r, unit(d, i, c_type ? 2 : 1));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            push_pm(r, unit(d, i) - unit(d, j));
            push_pm(r, unit(d, i) + unit(d, j));
        }
    return r;
}

std::vector<Vec> type_d_roots(int rank) {
    std::size_t d = rank;
    std::vector<Vec> r;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            push_pm(r, unit(d, i) - unit(d, j));
            push_pm(r, unit(d, i) + unit(d, j));
        }
    return r;
}

std::vector<Vec> type_g2_roots() {
    // integer vectors in the sum-zero plane of R^3 with squared length 2 or 6
    std::vector<Vec> r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) push_pm(r, unit(3, i) - unit(3, j));
    for (std::size_t i = 0; i < 3; ++i) {
        Vec v(3, -1);
        v[i] = 2;
        push_pm(r, v);
    }
    return r;
}

std::vector<Vec> type_f4_roots() {
    std::vector<Vec> r;
    for (std::size_t i = 0; i < 4; ++i) push_pm(r, unit(4, i));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            push_pm(r, unit(4, i) - unit(4, j));
            push_pm(r, unit(4, i) + unit(4, j));
        }
    mpq_class half(1, 2);
    for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (std::size_t i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -half : half;
        if (v[0] > 0) push_pm(r, v);
    }
    return r;
}

std::vector<Vec> type_e8_roots() {
    std::vector<Vec> r;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j) {
            push_pm(r, unit(8, i) - unit(8, j));
            push_pm(r, unit(8, i) + unit(8, j));
        }
    mpq_class half(1, 2);
    for (int mask = 0; mask < 256; ++mask) {
        int minus = __builtin_popcount(mask);
        if (minus % 2 != 0) continue;
        Vec v(8);
        for (std::size_t i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -half : half;
        r.push_back(v);
    }
    return r;
}

/// Simple roots of the rank-8 E system in its standard coordinates; the
/// rank-7 and rank-6 subsystems are the roots lying in the span of the first
/// 7 resp. 6 of these.
std::vector<Vec> e8_simple_basis() {
    mpq_class half(1, 2);
    std::vector<Vec> alpha;
    Vec a1(8, -half);
    a1[0] = half;
    a1[7] = half;
    alpha.push_back(a1);
    alpha.push_back(unit(8, 0) + unit(8, 1));
    for (std::size_t i = 1; i <= 6; ++i) alpha.push_back(unit(8, i) - unit(8, i - 1));
    return alpha;
}

std::vector<Vec> type_e_roots(int rank) {
    std::vector<Vec> e8 = type_e8_roots();
    if (rank == 8) return e8;
    std::vector<Vec> basis = e8_simple_basis();
    basis.resize(rank);
    std::size_t base_rank = rank_of(basis);
    std::vector<Vec> r;
    for (const auto& root : e8) {
        std::vector<Vec> probe = basis;
        probe.push_back(root);
        if (rank_of(probe) == base_rank) r.push_back(root);
    }
    return r;
}

} // namespace

void simple_system(RootSystem& rs, const Vec& ordering_vector) {
    rs.ordering_vector = ordering_vector;
    rs.positive.clear();
    rs.simple.clear();
    std::set<Vec> positive_set;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        mpq_class pairing = dot(rs.roots[i], ordering_vector);
        if (pairing == 0)
            throw InvalidArgument("simple_system: ordering vector orthogonal to root " +
                                  vec_str(rs.roots[i]));
        if (pairing > 0) {
            rs.positive.push_back(i);
            positive_set.insert(rs.roots[i]);
        }
    }
    for (auto i : rs.positive) {
        bool decomposable = false;
        for (auto j : rs.positive) {
            if (j == i) continue;
            Vec rest = rs.roots[i] - rs.roots[j];
            if (positive_set.count(rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) rs.simple.push_back(i);
    }
}

RootSystem build_root_system(const std::string& label) {
    if (label.size() < 2) throw InvalidArgument("unsupported type: " + label);
    char family = label[0];
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (...) {
        throw InvalidArgument("unsupported type: " + label);
    }

    RootSystem rs;
    rs.label = label;
    rs.family = family;
    rs.rank = rank;
    switch (family) {
        case 'A':
            if (rank < 1) throw InvalidArgument("A-type needs rank >= 1");
            rs.roots = type_a_roots(rank);
            rs.ambient_dim = rank + 1;
            break;
        case 'B':
        case 'C':
            if (rank < 2) throw InvalidArgument("B/C-type needs rank >= 2");
            rs.roots = type_bc_roots(rank, family == 'C');
            rs.ambient_dim = rank;
            break;
        case 'D':
            if (rank < 4) throw InvalidArgument("D-type needs rank >= 4");
            rs.roots = type_d_roots(rank);
            rs.ambient_dim = rank;
            break;
        case 'E':
            if (rank < 6 || rank > 8) throw InvalidArgument("E-type needs rank 6..8");
            rs.roots = type_e_roots(rank);
            rs.ambient_dim = 8;
            break;
        case 'F':
            if (rank != 4) throw InvalidArgument("F-type needs rank 4");
            rs.roots = type_f4_roots();
            rs.ambient_dim = 4;
            break;
        case 'G':
            if (rank != 2) throw InvalidArgument("G-type needs rank 2");
            rs.roots = type_g2_roots();
            rs.ambient_dim = 3;
            break;
        default:
            throw InvalidArgument("unsupported type: " + label);
    }

    // length classes in ascending squared length
    std::map<mpq_class, int> classes;
    for (const auto& r : rs.roots) classes.emplace(dot(r, r), 0);
    int idx = 0;
    for (auto& [len, c] : classes) c = idx++;
    rs.num_classes = classes.size();
    if (rs.num_classes > 2)
        throw Error("build_root_system: more than two length classes in " + label);
    rs.length_class.reserve(rs.roots.size());
    for (const auto& r : rs.roots) rs.length_class.push_back(classes[dot(r, r)]);

    simple_system(rs, default_ordering_vector(rs.ambient_dim));

    std::string err = check_axioms(rs);
    if (!err.empty()) throw Error("build_root_system(" + label + "): " + err);
    if (rs.simple.size() != static_cast<std::size_t>(rs.rank))
        throw Error("build_root_system(" + label + "): simple system has wrong size");
    return rs;
}

std::string check_axioms(const RootSystem& rs) {
    std::set<Vec> root_set(rs.roots.begin(), rs.roots.end());
    if (root_set.size() != rs.roots.size()) return "duplicate roots";
    for (const auto& a : rs.roots) {
        if (is_zero(a)) return "zero root";
        // R cap R*a = {a, -a}
        for (const auto& b : rs.roots) {
            // b = c*a for some scalar c?
            std::size_t piv = 0;
            while (piv < a.size() && a[piv] == 0) ++piv;
            if (b[piv] == 0) continue;
            mpq_class c = b[piv] / a[piv];
            if (c * a == b && c != 1 && c != -1)
                return "scalar multiple " + vec_str(b) + " of root " + vec_str(a);
        }
    }
    for (const auto& a : rs.roots) {
        mpq_class nn = dot(a, a);
        for (const auto& b : rs.roots) {
            Vec image = b - (2 * dot(b, a) / nn) * a;
            if (!root_set.count(image))
                return "reflection of " + vec_str(b) + " in " + vec_str(a) + " leaves the system";
        }
    }
    return {};
}

std::string check_crystallographic(const RootSystem& rs) {
    for (const auto& a : rs.roots) {
        Vec av = coroot(a);
        for (const auto& b : rs.roots) {
            mpq_class c = dot(b, av);
            if (c.get_den() != 1)
                return "<" + vec_str(b) + ", coroot " + vec_str(a) + "> = " + c.get_str() +
                       " is not an integer";
        }
    }
    return {};
}

int coxeter_order(const Vec& alpha, const Vec& beta, int cap) {
    // parallel roots: the reflections coincide and the product is trivial
    std::size_t piv = 0;
    while (piv < alpha.size() && alpha[piv] == 0) ++piv;
    if (beta[piv] != 0) {
        mpq_class c = beta[piv] / alpha[piv];
        if (c * alpha == beta) return 1;
    }

    // restriction of sigma_alpha sigma_beta to span(alpha, beta) in the basis
    // (alpha, beta); the complement is fixed pointwise
    mpq_class ab = 2 * dot(alpha, beta) / dot(beta, beta);  // <alpha, beta^vee>
    mpq_class ba = 2 * dot(beta, alpha) / dot(alpha, alpha);
    // sigma_alpha = [[-1, -ba], [0, 1]], sigma_beta = [[1, 0], [-ab, -1]]
    mpq_class m00 = -1 + ab * ba, m01 = ba, m10 = -ab, m11 = -1;
    mpq_class a00 = m00, a01 = m01, a10 = m10, a11 = m11;
    for (int order = 1; order <= cap; ++order) {
        if (a00 == 1 && a01 == 0 && a10 == 0 && a11 == 1) return order;
        mpq_class b00 = a00 * m00 + a01 * m10;
        mpq_class b01 = a00 * m01 + a01 * m11;
        mpq_class b10 = a10 * m00 + a11 * m10;
        mpq_class b11 = a10 * m01 + a11 * m11;
        a00 = b00; a01 = b01; a10 = b10; a11 = b11;
    }
    throw CapExceeded("coxeter_order: exceeded cap, roots are not crystallographic");
}

std::set<GroupElem> weyl_group_enumerate(const RootSystem& rs, std::size_t cap) {
    std::vector<GroupElem> gens;
    for (auto i : rs.simple) gens.push_back(GroupElem::reflection(rs.roots[i]));
    std::set<GroupElem> group;
    std::vector<GroupElem> frontier{GroupElem::identity(rs.ambient_dim)};
    group.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<GroupElem> next;
        for (const auto& w : frontier) {
            for (const auto& g : gens) {
                GroupElem prod = w * g;
                if (group.insert(prod).second) {
                    if (group.size() > cap)
                        throw CapExceeded("weyl_group_enumerate: cap of " + std::to_string(cap) +
                                          " exceeded for " + rs.label);
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return group;
}

std::string check_positive_decomposition(const RootSystem& rs) {
    std::vector<Vec> simple = rs.simple_roots();
    for (auto i : rs.positive) {
        auto sol = solve_in_span(simple, rs.roots[i]);
        if (!sol) return "positive root " + vec_str(rs.roots[i]) + " outside simple span";
        for (const auto& c : *sol)
            if (c < 0 || c.get_den() != 1)
                return "positive root " + vec_str(rs.roots[i]) +
                       " has a non-integral or negative coefficient " + c.get_str();
    }
    return {};
}

std::vector<std::vector<int>> coxeter_matrix(const RootSystem& rs) {
    std::size_t k = rs.simple.size();
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 1));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) m[i][j] = coxeter_order(rs.roots[rs.simple[i]], rs.roots[rs.simple[j]]);
    return m;
}

} // namespace cmlax
