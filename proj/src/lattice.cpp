#include "epwlab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace epwlab::lattice {

namespace {

mpq_class mpq_mod(const mpq_class& x, long m) {
    mpq_class d = x / m;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), d.get_num().get_mpz_t(), d.get_den().get_mpz_t());
    return x - m * mpq_class(fl);
}

std::vector<mpq_class> to_q(const std::vector<long>& v) {
    std::vector<mpq_class> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

}  // namespace

EvenLattice make_even_lattice(IntMat gram, std::vector<std::string> labels) {
    if (gram.rows() != gram.cols()) throw shape_error("Gram matrix must be square");
    for (int i = 0; i < gram.rows(); ++i) {
        if (gram.at(i, i) % 2 != 0) throw precondition_error("Gram diagonal must be even");
        for (int j = 0; j < i; ++j)
            if (gram.at(i, j) != gram.at(j, i))
                throw precondition_error("Gram matrix must be symmetric");
    }
    if (gram.rows() > 0 && determinant(gram) == 0)
        throw degeneracy_error("Gram matrix is singular");
    if (!labels.empty() && static_cast<int>(labels.size()) != gram.rows())
        throw shape_error("label count mismatch");
    return EvenLattice{std::move(gram), std::move(labels)};
}

EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b) {
    IntMat g(a.rank() + b.rank(), a.rank() + b.rank());
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) g.at(i, j) = a.gram.at(i, j);
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) g.at(a.rank() + i, a.rank() + j) = b.gram.at(i, j);
    std::vector<std::string> labels;
    if (!a.labels.empty() && !b.labels.empty()) {
        labels = a.labels;
        labels.insert(labels.end(), b.labels.begin(), b.labels.end());
    }
    return make_even_lattice(std::move(g), std::move(labels));
}

EvenLattice hyperbolic_plane() {
    return make_even_lattice(IntMat::from_rows({{0, 1}, {1, 0}}));
}

EvenLattice minus_e8() {
    // Gram = negated E8 Cartan matrix; simple roots numbered along the
    // chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
    static const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    IntMat g(8, 8);
    for (int i = 0; i < 8; ++i) g.at(i, i) = -2;
    for (const auto& e : edges) {
        g.at(e[0] - 1, e[1] - 1) = 1;
        g.at(e[1] - 1, e[0] - 1) = 1;
    }
    return make_even_lattice(std::move(g));
}

EvenLattice rank_one(long even_norm) {
    return make_even_lattice(IntMat::from_rows({{even_norm}}));
}

mpz_class gram_det(const EvenLattice& l) { return determinant(l.gram); }

mpz_class pair_int(const EvenLattice& l, const std::vector<long>& a,
                   const std::vector<long>& b) {
    const int n = l.rank();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw shape_error("vector length does not match the lattice rank");
    mpz_class total = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (b[j] != 0) total += mpz_class(a[i]) * l.gram.at(i, j) * b[j];
    }
    return total;
}

mpq_class pair_q(const EvenLattice& l, const std::vector<mpq_class>& a,
                 const std::vector<mpq_class>& b) {
    const int n = l.rank();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw shape_error("vector length does not match the lattice rank");
    mpq_class total = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (b[j] != 0) total += a[i] * mpq_class(l.gram.at(i, j)) * b[j];
    }
    return total;
}

mpz_class FiniteQuadForm::group_order() const {
    mpz_class o = 1;
    for (long d : orders) o *= d;
    return o;
}

FiniteQuadForm discriminant_form(const EvenLattice& l) {
    exactalg::SmithResult s = exactalg::smith_normal_form(l.gram);
    FiniteQuadForm f;
    const int n = l.rank();
    for (int i = 0; i < n; ++i) {
        mpz_class di = s.d.at(i, i);
        if (di == 1) continue;
        if (!di.fits_slong_p()) throw internal_error("invariant factor too large");
        f.orders.push_back(di.get_si());
        // Generator: column i of V divided by d_i, read as a row of
        // coordinates in the lattice basis.
        std::vector<mpq_class> gen(n);
        for (int j = 0; j < n; ++j) gen[j] = mpq_class(s.v.at(j, i), di);
        for (auto& c : gen) c.canonicalize();
        f.generators.push_back(std::move(gen));
    }
    const size_t g = f.orders.size();
    f.q_table.resize(g);
    f.b_table.assign(g, std::vector<mpq_class>(g));
    for (size_t i = 0; i < g; ++i) {
        f.q_table[i] = mpq_mod(pair_q(l, f.generators[i], f.generators[i]), 2);
        for (size_t j = 0; j < g; ++j)
            f.b_table[i][j] = mpq_mod(pair_q(l, f.generators[i], f.generators[j]), 1);
    }
    return f;
}

std::vector<long> dual_class_coords(const EvenLattice& l, const FiniteQuadForm& f,
                                    const std::vector<mpq_class>& y) {
    const int n = l.rank();
    if (static_cast<int>(y.size()) != n) throw shape_error("vector length mismatch");
    // w = y * G must be integral for y to lie in the dual lattice.
    std::vector<mpz_class> w(n);
    for (int j = 0; j < n; ++j) {
        mpq_class c = 0;
        for (int i = 0; i < n; ++i)
            if (y[i] != 0) c += y[i] * mpq_class(l.gram.at(i, j));
        c.canonicalize();
        if (c.get_den() != 1)
            throw integrality_error("vector does not pair integrally with the lattice");
        w[j] = c.get_num();
    }
    exactalg::SmithResult s = exactalg::smith_normal_form(l.gram);
    std::vector<long> cls;
    for (int i = 0; i < n; ++i) {
        mpz_class di = s.d.at(i, i);
        if (di == 1) continue;
        mpz_class c = 0;
        for (int j = 0; j < n; ++j) c += s.u.at(i, j) * w[j];
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), di.get_mpz_t());
        cls.push_back(r.get_si());
    }
    if (cls.size() != f.orders.size()) throw internal_error("class coordinate count mismatch");
    return cls;
}

std::vector<mpq_class> class_representative(const FiniteQuadForm& f,
                                            const std::vector<long>& cls) {
    if (cls.size() != f.orders.size()) throw shape_error("class coordinate count mismatch");
    if (f.generators.empty()) return {};
    std::vector<mpq_class> y(f.generators[0].size(), mpq_class(0));
    for (size_t t = 0; t < cls.size(); ++t)
        for (size_t j = 0; j < y.size(); ++j) y[j] += cls[t] * f.generators[t][j];
    return y;
}

mpq_class q_value(const EvenLattice& l, const FiniteQuadForm& f,
                  const std::vector<long>& cls) {
    std::vector<mpq_class> y = class_representative(f, cls);
    if (y.empty()) y.assign(l.rank(), mpq_class(0));
    return mpq_mod(pair_q(l, y, y), 2);
}

mpq_class b_value(const EvenLattice& l, const FiniteQuadForm& f,
                  const std::vector<long>& cls_a, const std::vector<long>& cls_b) {
    std::vector<mpq_class> a = class_representative(f, cls_a);
    std::vector<mpq_class> b = class_representative(f, cls_b);
    if (a.empty()) a.assign(l.rank(), mpq_class(0));
    if (b.empty()) b.assign(l.rank(), mpq_class(0));
    return mpq_mod(pair_q(l, a, b), 1);
}

std::vector<std::vector<long>> isotropic_elements(const EvenLattice& l,
                                                  const FiniteQuadForm& f) {
    mpz_class order = f.group_order();
    if (order > 1000000) throw precondition_error("discriminant group too large to enumerate");
    std::vector<std::vector<long>> found;
    std::vector<long> cls(f.orders.size(), 0);
    for (;;) {
        bool zero = std::all_of(cls.begin(), cls.end(), [](long c) { return c == 0; });
        if (!zero && q_value(l, f, cls) == 0) found.push_back(cls);
        // Odometer increment, most significant coordinate first.
        size_t t = cls.size();
        while (t > 0) {
            --t;
            if (++cls[t] < f.orders[t]) break;
            cls[t] = 0;
            if (t == 0) return found;
        }
        if (cls.empty()) return found;
    }
}

Overlattice overlattice(const EvenLattice& l, const FiniteQuadForm& f,
                        const std::vector<std::vector<long>>& subgroup_classes) {
    const int n = l.rank();
    // Closure of the generated subgroup.
    std::set<std::vector<long>> closure;
    std::vector<long> zero(f.orders.size(), 0);
    closure.insert(zero);
    std::vector<std::vector<long>> frontier{zero};
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& h : frontier)
            for (const auto& g : subgroup_classes) {
                if (g.size() != f.orders.size()) throw shape_error("class coordinate mismatch");
                std::vector<long> sum(h.size());
                for (size_t i = 0; i < h.size(); ++i) sum[i] = (h[i] + g[i]) % f.orders[i];
                if (closure.insert(sum).second) next.push_back(sum);
            }
        frontier = std::move(next);
    }
    for (const auto& h : closure) {
        if (q_value(l, f, h) != 0)
            throw isotropy_error("subgroup is not isotropic for the quadratic form");
        for (const auto& h2 : closure)
            if (b_value(l, f, h, h2) != 0)
                throw isotropy_error("subgroup is not isotropic for the bilinear form");
    }

    // Stack the standard basis with representatives of the subgroup and
    // take the canonical integral basis of the generated lattice.
    std::vector<std::vector<mpq_class>> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<mpq_class> row(n, mpq_class(0));
        row[i] = 1;
        gens.push_back(std::move(row));
    }
    for (const auto& h : closure) {
        if (h == zero) continue;
        gens.push_back(class_representative(f, h));
    }
    mpz_class den = 1;
    for (const auto& row : gens)
        for (const auto& c : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    IntMat scaled(static_cast<int>(gens.size()), n);
    for (size_t i = 0; i < gens.size(); ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class c = gens[i][j] * mpq_class(den);
            c.canonicalize();
            scaled.at(static_cast<int>(i), j) = c.get_num();
        }
    IntMat h = exactalg::hermite_normal_form(scaled);
    if (h.rows() != n) throw internal_error("overlattice basis rank mismatch");
    std::vector<std::vector<mpq_class>> basis(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            basis[i][j] = mpq_class(h.at(i, j), den);
            basis[i][j].canonicalize();
        }

    IntMat gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class c = pair_q(l, basis[i], basis[j]);
            c.canonicalize();
            if (c.get_den() != 1) throw internal_error("overlattice Gram is not integral");
            gram.at(i, j) = c.get_num();
        }
    EvenLattice m = make_even_lattice(std::move(gram));

    long index = static_cast<long>(closure.size());
    if (gram_det(l) != gram_det(m) * index * index)
        throw internal_error("overlattice index does not match determinants");
    return Overlattice{std::move(m), std::move(basis), index};
}

bool RationalIsometry::is_integral() const {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j).rational().get_den() != 1) return false;
    return true;
}

RationalIsometry make_isometry(const EvenLattice& l, Matrix m) {
    const int n = l.rank();
    if (m.rows() != n || m.cols() != n) throw shape_error("isometry matrix size mismatch");
    if (m.field() != kFieldQ) throw context_error("isometries are rational matrices");
    Matrix g = l.gram.to_rational();
    if (m * g * m.transpose() != g)
        throw precondition_error("matrix does not preserve the bilinear form");
    return RationalIsometry{std::move(m)};
}

RationalIsometry identity_isometry(const EvenLattice& l) {
    return RationalIsometry{Matrix::identity(l.rank(), kFieldQ)};
}

RationalIsometry negation_isometry(const EvenLattice& l) {
    Matrix m = Matrix::identity(l.rank(), kFieldQ);
    for (int i = 0; i < l.rank(); ++i) m.at(i, i) = -m.at(i, i);
    return RationalIsometry{std::move(m)};
}

RationalIsometry compose(const RationalIsometry& first, const RationalIsometry& second) {
    return RationalIsometry{first.m * second.m};
}

RationalIsometry reflection(const EvenLattice& l, const std::vector<mpq_class>& gamma) {
    const int n = l.rank();
    if (static_cast<int>(gamma.size()) != n) throw shape_error("vector length mismatch");
    mpq_class norm = pair_q(l, gamma, gamma);
    if (norm == 0) throw degenerate_input_error("reflection vector has norm zero");
    // (x, gamma) for basis vectors: the row gamma * G.
    std::vector<mpq_class> pairings(n, mpq_class(0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (gamma[i] != 0) pairings[j] += gamma[i] * mpq_class(l.gram.at(i, j));
    Matrix m(n, n, kFieldQ);
    for (int i = 0; i < n; ++i) {
        mpq_class coef = 2 * pairings[i] / norm;
        for (int j = 0; j < n; ++j) {
            mpq_class v = coef * gamma[j];
            if (i == j) v -= 1;
            v.canonicalize();
            m.at(i, j) = Scalar::of_mpq(v);
        }
    }
    return make_isometry(l, std::move(m));
}

RationalIsometry reflection_int(const EvenLattice& l, const std::vector<long>& gamma) {
    return reflection(l, to_q(gamma));
}

// ------------------------------------------------------------------
// Norm enumeration
// ------------------------------------------------------------------
namespace {

struct Component {
    std::vector<int> idx;
    int n = 0;
    std::vector<std::vector<long>> g;
    enum Kind { NegDef, PosDef, Indef } kind = Indef;
    // Reverse completion of squares for the positive form P (= g or -g):
    // P(x) = sum_i d[i] * (x_i + sum_{j<i} l[i][j] x_j)^2.
    std::vector<mpq_class> d;
    std::vector<std::vector<mpq_class>> l;
    long min_norm = 0, max_norm = 0;  // over the coordinate box
};

bool reverse_udu(const std::vector<std::vector<long>>& p, int n, std::vector<mpq_class>& d,
                 std::vector<std::vector<mpq_class>>& l) {
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = p[i][j];
    d.assign(n, mpq_class(0));
    l.assign(n, {});
    for (int i = n - 1; i >= 0; --i) {
        if (m[i][i] <= 0) return false;
        d[i] = m[i][i];
        l[i].assign(i, mpq_class(0));
        for (int j = 0; j < i; ++j) l[i][j] = m[i][j] / m[i][i];
        for (int r = 0; r < i; ++r)
            for (int c = 0; c < i; ++c) m[r][c] -= m[r][i] * m[c][i] / m[i][i];
    }
    return true;
}

long convex_vertex_max(const std::vector<std::vector<long>>& p, int n, long bound) {
    long best = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        long v = 0;
        for (int i = 0; i < n; ++i) {
            long xi = (mask & (1 << i)) ? bound : -bound;
            for (int j = 0; j < n; ++j) {
                long xj = (mask & (1 << j)) ? bound : -bound;
                v += p[i][j] * xi * xj;
            }
        }
        best = std::max(best, v);
    }
    return best;
}

Component analyze_component(const EvenLattice& lat, std::vector<int> idx, long bound) {
    Component c;
    c.idx = std::move(idx);
    c.n = static_cast<int>(c.idx.size());
    if (c.n > 16) throw precondition_error("connected Gram block too large to enumerate");
    c.g.assign(c.n, std::vector<long>(c.n));
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            mpz_class e = lat.gram.at(c.idx[i], c.idx[j]);
            c.g[i][j] = e.get_si();
        }
    std::vector<std::vector<long>> neg(c.n, std::vector<long>(c.n));
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) neg[i][j] = -c.g[i][j];
    if (reverse_udu(neg, c.n, c.d, c.l)) {
        c.kind = Component::NegDef;
        c.max_norm = 0;
        c.min_norm = -convex_vertex_max(neg, c.n, bound);
    } else if (reverse_udu(c.g, c.n, c.d, c.l)) {
        c.kind = Component::PosDef;
        c.min_norm = 0;
        c.max_norm = convex_vertex_max(c.g, c.n, bound);
    } else {
        c.kind = Component::Indef;
        long s = 0;
        for (int i = 0; i < c.n; ++i)
            for (int j = 0; j < c.n; ++j) s += std::abs(c.g[i][j]) * bound * bound;
        c.min_norm = -s;
        c.max_norm = s;
    }
    return c;
}

long component_value(const Component& c, const std::vector<long>& x) {
    long v = 0;
    for (int i = 0; i < c.n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < c.n; ++j) v += c.g[i][j] * x[i] * x[j];
    }
    return v;
}

// Enumerates component vectors with norm in [lo, hi] in lexicographic
// coordinate order; the callback returns false to stop early.
bool enumerate_component(const Component& c, long lo, long hi, long bound,
                         const std::function<bool(const std::vector<long>&, long)>& cb) {
    std::vector<long> x(c.n, 0);
    if (c.kind == Component::Indef) {
        std::function<bool(int)> rec = [&](int t) -> bool {
            if (t == c.n) {
                long v = component_value(c, x);
                if (v >= lo && v <= hi) return cb(x, v);
                return true;
            }
            for (long xv = -bound; xv <= bound; ++xv) {
                x[t] = xv;
                if (!rec(t + 1)) return false;
            }
            return true;
        };
        return rec(0);
    }
    // Definite: work with the positive form P and its square completion.
    const bool neg = c.kind == Component::NegDef;
    mpq_class plo = neg ? mpq_class(-hi) : mpq_class(lo);
    mpq_class phi = neg ? mpq_class(-lo) : mpq_class(hi);
    if (plo < 0) plo = 0;
    if (phi < plo) return true;
    std::vector<mpq_class> partial(c.n + 1, mpq_class(0));
    std::function<bool(int)> rec = [&](int t) -> bool {
        if (t == c.n) {
            if (partial[c.n] >= plo) {
                mpq_class v = neg ? -partial[c.n] : partial[c.n];
                v.canonicalize();
                return cb(x, v.get_num().get_si());
            }
            return true;
        }
        for (long xv = -bound; xv <= bound; ++xv) {
            x[t] = xv;
            mpq_class s = xv;
            for (int j = 0; j < t; ++j)
                if (x[j] != 0) s += c.l[t][j] * x[j];
            mpq_class term = c.d[t] * s * s;
            mpq_class np = partial[t] + term;
            if (np > phi) continue;
            partial[t + 1] = np;
            if (!rec(t + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

}  // namespace

std::vector<std::vector<long>> enumerate_norm_vectors(const EvenLattice& l, long target,
                                                      long bound, size_t max_count) {
    const int n = l.rank();
    if (bound < 0) throw precondition_error("bound must be nonnegative");
    // Connected components of the Gram graph, in order of smallest index.
    std::vector<int> comp_of(n, -1);
    std::vector<Component> comps;
    for (int start = 0; start < n; ++start) {
        if (comp_of[start] >= 0) continue;
        std::vector<int> stack{start}, members;
        comp_of[start] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w = 0; w < n; ++w)
                if (w != v && comp_of[w] < 0 && l.gram.at(v, w) != 0) {
                    comp_of[w] = comp_of[start];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(analyze_component(l, members, bound));
    }

    const size_t k = comps.size();
    std::vector<long> suf_min(k + 1, 0), suf_max(k + 1, 0);
    for (size_t i = k; i-- > 0;) {
        suf_min[i] = suf_min[i + 1] + comps[i].min_norm;
        suf_max[i] = suf_max[i + 1] + comps[i].max_norm;
    }

    std::vector<std::vector<long>> out;
    std::vector<long> assembled(n, 0);
    std::function<bool(size_t, long)> go = [&](size_t ci, long acc) -> bool {
        if (ci == k) {
            if (acc == target) {
                out.push_back(assembled);
                return out.size() < max_count;
            }
            return true;
        }
        long lo = target - acc - suf_max[ci + 1];
        long hi = target - acc - suf_min[ci + 1];
        return enumerate_component(
            comps[ci], lo, hi, bound,
            [&](const std::vector<long>& x, long v) -> bool {
                for (int t = 0; t < comps[ci].n; ++t) assembled[comps[ci].idx[t]] = x[t];
                return go(ci + 1, acc + v);
            });
    };
    go(0, 0);
    return out;
}

std::vector<std::vector<long>> enumerate_minus2(const EvenLattice& l, long bound,
                                                size_t max_count) {
    return enumerate_norm_vectors(l, -2, bound, max_count);
}

// ------------------------------------------------------------------
// Fixtures
// ------------------------------------------------------------------
namespace {

Fixture build_fixture() {
    Fixture fx;
    EvenLattice u_plane = hyperbolic_plane();
    EvenLattice e8m = minus_e8();
    EvenLattice big = direct_sum(
        direct_sum(direct_sum(u_plane, u_plane), direct_sum(u_plane, u_plane)),
        direct_sum(e8m, e8m));
    big.labels = {"f1", "f2", "g1", "g2", "h1", "h2", "k1", "k2",
                  "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8",
                  "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8"};
    fx.big = std::move(big);

    auto amb = [&](std::initializer_list<std::pair<int, long>> entries) {
        std::vector<long> v(24, 0);
        for (auto [i, c] : entries) v[i] = c;
        return v;
    };
    fx.z = amb({{0, 1}, {1, 1}});
    fx.e2 = amb({{0, 1}, {1, -1}});
    fx.u = amb({{2, 1}, {3, 1}});
    fx.e1 = amb({{2, 1}, {3, -1}});
    fx.zeta = amb({{0, 2}, {1, -2}, {2, 1}, {3, -1}});  // e1 + 2 e2

    // Basis of the orthogonal of z: e2, g1, g2, h1, h2, k1, k2, E8 blocks.
    std::vector<std::vector<long>> tilde_rows;
    tilde_rows.push_back(fx.e2);
    for (int j = 2; j < 24; ++j) {
        std::vector<long> r(24, 0);
        r[j] = 1;
        tilde_rows.push_back(r);
    }
    fx.tilde_basis = IntMat::from_rows(tilde_rows);
    {
        IntMat g(23, 23);
        for (int i = 0; i < 23; ++i)
            for (int j = 0; j < 23; ++j) {
                mpz_class v = pair_int(fx.big, tilde_rows[i], tilde_rows[j]);
                g.at(i, j) = v;
            }
        std::vector<std::string> labels = {"e2", "g1", "g2", "h1", "h2", "k1", "k2"};
        for (int t = 1; t <= 16; ++t) labels.push_back("r" + std::to_string(t));
        fx.tilde = make_even_lattice(std::move(g), std::move(labels));
    }

    // Basis of the orthogonal of {z, u}: e1, e2, h1, h2, k1, k2, E8 blocks.
    std::vector<std::vector<long>> core_rows;
    core_rows.push_back(fx.e1);
    core_rows.push_back(fx.e2);
    for (int j = 4; j < 24; ++j) {
        std::vector<long> r(24, 0);
        r[j] = 1;
        core_rows.push_back(r);
    }
    fx.core_basis = IntMat::from_rows(core_rows);
    {
        IntMat g(22, 22);
        for (int i = 0; i < 22; ++i)
            for (int j = 0; j < 22; ++j) g.at(i, j) = pair_int(fx.big, core_rows[i], core_rows[j]);
        std::vector<std::string> labels = {"e1", "e2", "h1", "h2", "k1", "k2"};
        for (int t = 1; t <= 16; ++t) labels.push_back("r" + std::to_string(t));
        fx.core = make_even_lattice(std::move(g), std::move(labels));
    }

    {
        std::vector<std::string> labels = {"u"};
        labels.insert(labels.end(), fx.core.labels.begin(), fx.core.labels.end());
        fx.u_plus_core = direct_sum(rank_one(2), fx.core);
        fx.u_plus_core.labels = std::move(labels);
    }

    fx.core_e1 = std::vector<long>(22, 0);
    fx.core_e1[0] = 1;
    fx.core_e2 = std::vector<long>(22, 0);
    fx.core_e2[1] = 1;
    fx.core_zeta = std::vector<long>(22, 0);
    fx.core_zeta[0] = 1;
    fx.core_zeta[1] = 2;

    {
        Matrix m = Matrix::identity(22, kFieldQ);
        m.at(0, 0) = Scalar::zero(kFieldQ);
        m.at(1, 1) = Scalar::zero(kFieldQ);
        m.at(0, 1) = Scalar::one(kFieldQ);
        m.at(1, 0) = Scalar::one(kFieldQ);
        fx.swap_core = make_isometry(fx.core, std::move(m));
    }
    {
        Matrix m = Matrix::identity(23, kFieldQ);
        m.at(1, 1) = Scalar::zero(kFieldQ);
        m.at(2, 2) = Scalar::zero(kFieldQ);
        m.at(1, 2) = Scalar::one(kFieldQ);
        m.at(2, 1) = Scalar::one(kFieldQ);
        fx.swap_u_plus_core = make_isometry(fx.u_plus_core, std::move(m));
    }
    {
        // On the ambient lattice the swap fixes z and u, exchanges e1 and
        // e2, and is the identity on the remaining blocks; on the f/g
        // planes its matrix is half-integral.
        Matrix m = Matrix::identity(24, kFieldQ);
        auto set_row = [&](int i, std::initializer_list<std::pair<int, mpq_class>> entries) {
            for (int j = 0; j < 24; ++j) m.at(i, j) = Scalar::zero(kFieldQ);
            for (auto& [j, c] : entries) m.at(i, j) = Scalar::of_mpq(c);
        };
        mpq_class h(1, 2);
        set_row(0, {{0, h}, {1, h}, {2, h}, {3, -h}});   // f1 -> (z + e1)/2
        set_row(1, {{0, h}, {1, h}, {2, -h}, {3, h}});   // f2 -> (z - e1)/2
        set_row(2, {{0, h}, {1, -h}, {2, h}, {3, h}});   // g1 -> (u + e2)/2
        set_row(3, {{0, -h}, {1, h}, {2, h}, {3, h}});   // g2 -> (u - e2)/2
        fx.swap_big = make_isometry(fx.big, std::move(m));
    }

    fx.disc_u_plus_core = discriminant_form(fx.u_plus_core);
    {
        std::vector<mpq_class> y1(23, mpq_class(0)), y2(23, mpq_class(0));
        y1[0] = mpq_class(1, 2);
        y1[1] = mpq_class(1, 2);  // (u + e1)/2
        y2[0] = mpq_class(1, 2);
        y2[2] = mpq_class(1, 2);  // (u + e2)/2
        fx.class_u_e1 = dual_class_coords(fx.u_plus_core, fx.disc_u_plus_core, y1);
        fx.class_u_e2 = dual_class_coords(fx.u_plus_core, fx.disc_u_plus_core, y2);
    }
    return fx;
}

}  // namespace

const Fixture& fixture() {
    static const Fixture fx = build_fixture();
    return fx;
}

bool epsilon_swaps(const RationalIsometry& iso) {
    const Fixture& fx = fixture();
    if (iso.m.rows() != 23) throw shape_error("expected an isometry of the rank-23 lattice");
    if (!iso.is_integral()) throw precondition_error("epsilon action needs an integral isometry");
    auto image_class = [&](const std::vector<long>& cls) {
        std::vector<mpq_class> y = class_representative(fx.disc_u_plus_core, cls);
        std::vector<mpq_class> img(23, mpq_class(0));
        for (int j = 0; j < 23; ++j) {
            for (int i = 0; i < 23; ++i)
                if (y[i] != 0) img[j] += y[i] * iso.m.at(i, j).rational();
            img[j].canonicalize();
        }
        return dual_class_coords(fx.u_plus_core, fx.disc_u_plus_core, img);
    };
    std::vector<long> i1 = image_class(fx.class_u_e1);
    std::vector<long> i2 = image_class(fx.class_u_e2);
    if (i1 == fx.class_u_e1 && i2 == fx.class_u_e2) return false;
    if (i1 == fx.class_u_e2 && i2 == fx.class_u_e1) return true;
    throw internal_error("distinguished isotropic classes were not preserved");
}

std::vector<mpq_class> conjugate_reflection_e1_formula(const std::vector<long>& xi) {
    if (static_cast<int>(xi.size()) != 22) throw shape_error("vector length mismatch");
    long a1 = xi[0], a2 = xi[1];
    mpq_class c1(18 * a1 * a1 - 48 * a1 * a2 + 32 * a2 * a2 - 25, 25);
    mpq_class c2(-(24 * a1 * a1 - 14 * a1 * a2 - 24 * a2 * a2), 25);
    mpq_class cnu(2 * (3 * a1 - 4 * a2), 5);
    c1.canonicalize();
    c2.canonicalize();
    cnu.canonicalize();
    std::vector<mpq_class> img(22, mpq_class(0));
    img[0] = c1;
    img[1] = c2;
    for (int j = 2; j < 22; ++j) img[j] = cnu * xi[j];
    for (auto& c : img) c.canonicalize();
    return img;
}

ConjugateReflectionReport conjugate_reflection_check(const std::vector<long>& xi) {
    const Fixture& fx = fixture();
    if (static_cast<int>(xi.size()) != 22) throw shape_error("vector length mismatch");
    if (pair_int(fx.core, xi, xi) != -2)
        throw precondition_error("vector must have norm -2");

    RationalIsometry r_zeta = reflection(fx.core, to_q(fx.core_zeta));
    RationalIsometry r_xi = reflection(fx.core, to_q(xi));
    RationalIsometry t = compose(compose(r_zeta, r_xi), r_zeta);

    ConjugateReflectionReport rep;
    rep.xi = xi;
    rep.a1 = xi[0];
    rep.a2 = xi[1];
    rep.xi_dot_zeta = pair_int(fx.core, xi, fx.core_zeta);
    mpz_class m5;
    mpz_fdiv_r_ui(m5.get_mpz_t(), rep.xi_dot_zeta.get_mpz_t(), 5);
    rep.xi_dot_zeta_mod5 = m5.get_si();
    rep.integral = t.is_integral();
    rep.e1_image.resize(22);
    for (int j = 0; j < 22; ++j) rep.e1_image[j] = t.m.at(0, j).rational();
    std::vector<mpq_class> expected = conjugate_reflection_e1_formula(xi);
    rep.formula_matches = (rep.e1_image == expected);
    rep.implication_holds = !rep.integral || rep.xi_dot_zeta_mod5 == 0;
    return rep;
}

}  // namespace epwlab::lattice
