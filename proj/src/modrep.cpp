#include "ff/modrep.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "ff/plattice.hpp"

namespace ff {

namespace {

void check_same_shape(const FpMat& x, const FpMat& y) {
    if (x.p != y.p || x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("matrix shape/modulus mismatch");
}

std::uint8_t fp_neg(int p, std::uint8_t v) { return static_cast<std::uint8_t>((p - v) % p); }

// multiplicative inverse mod p (p prime, v != 0)
std::uint8_t fp_inv_scalar(int p, std::uint8_t v) {
    int r = 1, b = v, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint8_t>(r);
}

std::vector<std::uint8_t> vec_mul(const std::vector<std::uint8_t>& v, const FpMat& m) {
    if (static_cast<int>(v.size()) != m.rows) throw std::invalid_argument("vec_mul shape mismatch");
    std::vector<std::uint8_t> r(static_cast<std::size_t>(m.cols), 0);
    for (int i = 0; i < m.rows; ++i) {
        if (v[static_cast<std::size_t>(i)] == 0) continue;
        int c = v[static_cast<std::size_t>(i)];
        for (int j = 0; j < m.cols; ++j)
            r[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((r[static_cast<std::size_t>(j)] + c * m.at(i, j)) % m.p);
    }
    return r;
}

std::vector<std::uint8_t> row_of(const FpMat& m, int i) {
    return std::vector<std::uint8_t>(m.a.begin() + static_cast<std::ptrdiff_t>(i) * m.cols,
                                     m.a.begin() + static_cast<std::ptrdiff_t>(i + 1) * m.cols);
}

}  // namespace

FpMat FpMat::identity(int p_, int n) {
    FpMat m(p_, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMat fp_mul(const FpMat& x, const FpMat& y) {
    if (x.p != y.p || x.cols != y.rows) throw std::invalid_argument("fp_mul shape mismatch");
    FpMat r(x.p, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int c = x.at(i, k);
            if (c == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = static_cast<std::uint8_t>((r.at(i, j) + c * y.at(k, j)) % x.p);
        }
    return r;
}

FpMat fp_add(const FpMat& x, const FpMat& y) {
    check_same_shape(x, y);
    FpMat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = static_cast<std::uint8_t>((r.a[i] + y.a[i]) % r.p);
    return r;
}

FpMat fp_sub(const FpMat& x, const FpMat& y) {
    check_same_shape(x, y);
    FpMat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = static_cast<std::uint8_t>((r.a[i] + (r.p - y.a[i])) % r.p);
    return r;
}

FpMat fp_transpose(const FpMat& x) {
    FpMat r(x.p, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<int> rref_inplace(FpMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        std::uint8_t inv = fp_inv_scalar(m.p, m.at(r, c));
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = static_cast<std::uint8_t>(m.at(r, j) * inv % m.p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            int f = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = static_cast<std::uint8_t>((m.at(i, j) + (m.p - f) * m.at(r, j)) % m.p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// rows spanning {x : m x^T = 0} (solutions of the column system)
FpMat right_nullspace(FpMat m) {
    std::vector<int> pivots = rref_inplace(m);
    std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    FpMat basis(m.p, static_cast<int>(free_cols.size()), m.cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        int f = free_cols[k];
        basis.at(static_cast<int>(k), f) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis.at(static_cast<int>(k), pivots[r]) = fp_neg(m.p, m.at(static_cast<int>(r), f));
    }
    return basis;
}

}  // namespace

int fp_rank(FpMat x) { return static_cast<int>(rref_inplace(x).size()); }

FpMat fp_rref(FpMat x) {
    rref_inplace(x);
    return x;
}

FpMat fp_left_nullspace(const FpMat& x) { return right_nullspace(fp_transpose(x)); }

bool fp_invertible(const FpMat& x) { return x.rows == x.cols && fp_rank(x) == x.rows; }

FpMat fp_inverse(const FpMat& x) {
    if (x.rows != x.cols) throw std::invalid_argument("fp_inverse: not square");
    int n = x.rows;
    FpMat aug(x.p, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw std::invalid_argument("fp_inverse: singular matrix");
    FpMat r(x.p, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

bool Echelon::insert(std::vector<std::uint8_t> v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Echelon: wrong length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint8_t c = v[static_cast<std::size_t>(pivots_[r])];
        if (c == 0) continue;
        for (int j = 0; j < cols_; ++j)
            v[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
                (v[static_cast<std::size_t>(j)] + (p_ - c) * rows_[r][static_cast<std::size_t>(j)]) % p_);
    }
    int piv = -1;
    for (int j = 0; j < cols_; ++j)
        if (v[static_cast<std::size_t>(j)] != 0) { piv = j; break; }
    if (piv < 0) return false;
    std::uint8_t inv = fp_inv_scalar(p_, v[static_cast<std::size_t>(piv)]);
    for (int j = 0; j < cols_; ++j)
        v[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(v[static_cast<std::size_t>(j)] * inv % p_);
    // clear the new pivot column in the existing rows to stay fully reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint8_t c = rows_[r][static_cast<std::size_t>(piv)];
        if (c == 0) continue;
        for (int j = 0; j < cols_; ++j)
            rows_[r][static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
                (rows_[r][static_cast<std::size_t>(j)] + (p_ - c) * v[static_cast<std::size_t>(j)]) % p_);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    return true;
}

bool Echelon::contains(std::vector<std::uint8_t> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint8_t c = v[static_cast<std::size_t>(pivots_[r])];
        if (c == 0) continue;
        for (int j = 0; j < cols_; ++j)
            v[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
                (v[static_cast<std::size_t>(j)] + (p_ - c) * rows_[r][static_cast<std::size_t>(j)]) % p_);
    }
    return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

FpMat Echelon::basis() const {
    FpMat m(p_, static_cast<int>(rows_.size()), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (int j = 0; j < cols_; ++j) m.at(static_cast<int>(r), j) = rows_[r][static_cast<std::size_t>(j)];
    return m;
}

FpModule module_from_action(const PermGroup& g, const PermGroup& q, ModuleSpec spec) {
    if (g.degree() != q.degree()) throw std::invalid_argument("module_from_action: degree mismatch");
    SmallGroup sq = SmallGroup::from_group(q);
    int p = sq.prime();
    if (!sq.is_pgroup(p)) throw std::invalid_argument("module_from_action: Q is not a p-group");
    for (const Permutation& a : g.generators())
        for (const Permutation& x : q.generators())
            if (!q.contains(x.conjugated_by(a)))
                throw std::invalid_argument("module_from_action: Q is not normalized by G");

    std::vector<int> full = sq.full_set();
    std::vector<int> phi = sq.frattini_of(full, p);
    if (spec == ModuleSpec::natural && !sq.is_elementary_abelian_set(full, p))
        throw std::invalid_argument("module_from_action: Q is not elementary abelian");

    int n = sq.size();
    // left cosets of Phi, labeled by their least element
    std::vector<int> coset_rep(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        int r = n;
        for (int f : phi) r = std::min(r, sq.mul(f, x));
        coset_rep[static_cast<std::size_t>(x)] = r;
    }
    std::unordered_map<int, int> coset_id;
    for (int x = 0; x < n; ++x)
        if (coset_rep[static_cast<std::size_t>(x)] == x) {
            int id = static_cast<int>(coset_id.size());
            coset_id.emplace(x, id);
        }

    // greedy basis of Q/Phi
    std::vector<char> in_span(static_cast<std::size_t>(n), 0);
    for (int f : phi) in_span[static_cast<std::size_t>(f)] = 1;
    std::vector<int> basis_elems;
    for (int x = 0; x < n; ++x) {
        if (in_span[static_cast<std::size_t>(x)]) continue;
        basis_elems.push_back(x);
        std::vector<int> old;
        for (int i = 0; i < n; ++i)
            if (in_span[static_cast<std::size_t>(i)]) old.push_back(i);
        for (int e = 1; e < p; ++e) {
            int xe = sq.power(x, e);
            for (int s : old) in_span[static_cast<std::size_t>(sq.mul(s, xe))] = 1;
        }
    }
    int d = static_cast<int>(basis_elems.size());
    if (d == 0) throw std::invalid_argument("module_from_action: Q/Phi(Q) is trivial");

    // coordinates per coset, by enumerating the span odometer-style
    std::vector<std::vector<std::uint8_t>> coords(coset_id.size());
    std::vector<std::uint8_t> tuple(static_cast<std::size_t>(d), 0);
    std::size_t assigned = 0;
    for (;;) {
        int e = 0;
        for (int i = 0; i < d; ++i) e = sq.mul(e, sq.power(basis_elems[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(i)]));
        int cid = coset_id.at(coset_rep[static_cast<std::size_t>(e)]);
        if (!coords[static_cast<std::size_t>(cid)].empty())
            throw std::logic_error("module_from_action: coset hit twice");
        coords[static_cast<std::size_t>(cid)] = tuple;
        ++assigned;
        int i = d - 1;
        while (i >= 0) {
            tuple[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((tuple[static_cast<std::size_t>(i)] + 1) % p);
            if (tuple[static_cast<std::size_t>(i)] != 0) break;
            --i;
        }
        if (i < 0) break;
    }
    if (assigned != coset_id.size()) throw std::logic_error("module_from_action: span does not cover Q/Phi");

    FpModule m;
    m.p = p;
    m.dim = d;
    m.group = g;
    for (const Permutation& a : g.generators()) {
        FpMat mat(p, d, d);
        for (int i = 0; i < d; ++i) {
            Permutation img = sq.element(basis_elems[static_cast<std::size_t>(i)]).conjugated_by(a);
            int idx = sq.index_of(img);
            if (idx < 0) throw std::logic_error("module_from_action: conjugate left Q");
            const std::vector<std::uint8_t>& c = coords[static_cast<std::size_t>(coset_id.at(coset_rep[static_cast<std::size_t>(idx)]))];
            for (int j = 0; j < d; ++j) mat.at(i, j) = c[static_cast<std::size_t>(j)];
        }
        if (!fp_invertible(mat)) throw std::logic_error("module_from_action: singular actor");
        m.actors.push_back(std::move(mat));
    }
    validate_module(m);
    return m;
}

void validate_module(const FpModule& m, std::uint64_t seed, int trials) {
    for (const FpMat& a : m.actors) {
        if (a.p != m.p || a.rows != m.dim || a.cols != m.dim)
            throw std::logic_error("module actor has wrong shape");
        if (!fp_invertible(a)) throw std::logic_error("module actor is singular");
    }
    if (!m.group) return;
    const std::vector<Permutation>& gens = m.group->generators();
    if (gens.size() != m.actors.size())
        throw std::logic_error("module actor count does not match the generator list");
    if (gens.empty()) return;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(1, 12);
    FpMat id = FpMat::identity(m.p, m.dim);
    for (int t = 0; t < trials; ++t) {
        Permutation pw = Permutation::identity(m.group->degree());
        FpMat mw = id;
        int l = len(rng);
        for (int i = 0; i < l; ++i) {
            std::size_t k = pick(rng);
            pw = pw * gens[k];
            mw = fp_mul(mw, m.actors[k]);
        }
        if (pw.is_identity() && !(mw == id))
            throw std::logic_error("matrix word differs from identity on an identity permutation word");
    }
}

FpMat fixed_space(const FpModule& m, const std::vector<int>& actor_subset) {
    std::vector<int> idx = actor_subset;
    if (idx.empty())
        for (std::size_t i = 0; i < m.actors.size(); ++i) idx.push_back(static_cast<int>(i));
    FpMat stacked(m.p, m.dim, m.dim * static_cast<int>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const FpMat& a = m.actors.at(static_cast<std::size_t>(idx[k]));
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j) {
                int v = a.at(i, j) + (i == j ? m.p - 1 : 0);
                stacked.at(i, static_cast<int>(k) * m.dim + j) = static_cast<std::uint8_t>(v % m.p);
            }
    }
    return fp_left_nullspace(stacked);
}

FpMat spin(const FpModule& m, const FpMat& seed) {
    if (seed.cols != m.dim || seed.p != m.p) throw std::invalid_argument("spin: seed shape mismatch");
    Echelon ech(m.p, m.dim);
    std::queue<std::vector<std::uint8_t>> work;
    for (int i = 0; i < seed.rows; ++i) {
        std::vector<std::uint8_t> v = row_of(seed, i);
        if (ech.insert(v)) work.push(std::move(v));
    }
    while (!work.empty() && ech.rank() < m.dim) {
        std::vector<std::uint8_t> v = std::move(work.front());
        work.pop();
        for (const FpMat& a : m.actors) {
            std::vector<std::uint8_t> w = vec_mul(v, a);
            if (ech.insert(w)) work.push(std::move(w));
        }
    }
    return ech.basis();
}

namespace {

FpMat one_row(int p, const std::vector<std::uint8_t>& v) {
    FpMat m(p, 1, static_cast<int>(v.size()));
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, static_cast<int>(j)) = v[j];
    return m;
}

FpModule dual_module(const FpModule& m) {
    FpModule d;
    d.p = m.p;
    d.dim = m.dim;
    for (const FpMat& a : m.actors) d.actors.push_back(fp_transpose(fp_inverse(a)));
    return d;
}

}  // namespace

IrreducibilityReport is_irreducible(const FpModule& m, const IrreducibilityOptions& opt) {
    IrreducibilityReport rep;
    if (m.dim == 0) {
        rep.irreducible = false;
        return rep;
    }
    if (m.dim == 1) {
        rep.irreducible = true;
        return rep;
    }
    std::uint64_t count = 1;
    bool exhaustive = true;
    for (int i = 0; i < m.dim; ++i) {
        count *= static_cast<std::uint64_t>(m.p);
        if (count > opt.exhaustive_bound) { exhaustive = false; break; }
    }
    if (exhaustive) {
        // one seed per 1-dim subspace: first nonzero coordinate normalized to 1
        std::vector<std::uint8_t> v(static_cast<std::size_t>(m.dim), 0);
        for (;;) {
            int i = m.dim - 1;
            while (i >= 0) {
                v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((v[static_cast<std::size_t>(i)] + 1) % m.p);
                if (v[static_cast<std::size_t>(i)] != 0) break;
                --i;
            }
            if (i < 0) break;
            int first = 0;
            while (v[static_cast<std::size_t>(first)] == 0) ++first;
            if (v[static_cast<std::size_t>(first)] != 1) continue;
            FpMat sp = spin(m, one_row(m.p, v));
            if (sp.rows < m.dim) {
                rep.irreducible = false;
                rep.witness = sp;
                return rep;
            }
        }
        rep.irreducible = true;
        return rep;
    }
    // randomized path with dual check (used only above the exhaustive bound)
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coef(0, m.p - 1);
    FpModule dual = dual_module(m);
    const FpModule* mods[2] = {&m, &dual};
    for (const FpModule* mod : mods) {
        for (int t = 0; t < opt.random_seeds; ++t) {
            std::vector<std::uint8_t> v(static_cast<std::size_t>(m.dim), 0);
            bool nz = false;
            while (!nz)
                for (int j = 0; j < m.dim; ++j) {
                    v[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(coef(rng));
                    nz = nz || v[static_cast<std::size_t>(j)] != 0;
                }
            FpMat sp = spin(*mod, one_row(m.p, v));
            if (sp.rows < m.dim) {
                rep.irreducible = false;
                if (mod == &m) {
                    rep.witness = sp;
                } else {
                    // a proper dual submodule annihilates a proper submodule
                    rep.witness = fp_left_nullspace(fp_transpose(sp));
                }
                return rep;
            }
        }
    }
    rep.irreducible = true;
    return rep;
}

int end_algebra_dim(const FpModule& m) {
    int d = m.dim;
    Echelon ech(m.p, d * d);
    std::vector<std::uint8_t> row(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (const FpMat& a : m.actors) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::fill(row.begin(), row.end(), 0);
                // (X a - a X)[i][j] = sum_k X[i][k] a[k][j] - sum_k a[i][k] X[k][j]
                for (int k = 0; k < d; ++k) {
                    row[static_cast<std::size_t>(i * d + k)] =
                        static_cast<std::uint8_t>((row[static_cast<std::size_t>(i * d + k)] + a.at(k, j)) % m.p);
                    row[static_cast<std::size_t>(k * d + j)] =
                        static_cast<std::uint8_t>((row[static_cast<std::size_t>(k * d + j)] + m.p - a.at(i, k)) % m.p);
                }
                ech.insert(row);
            }
    }
    return d * d - ech.rank();
}

bool is_absolutely_irreducible(const FpModule& m, const IrreducibilityOptions& opt) {
    return is_irreducible(m, opt).irreducible && end_algebra_dim(m) == 1;
}

int hom_space_dim(const FpModule& m, const FpModule& n) {
    if (m.p != n.p) throw std::invalid_argument("hom_space_dim: different primes");
    if (m.actors.size() != n.actors.size())
        throw std::invalid_argument("hom_space_dim: generator lists do not correspond");
    int dm = m.dim, dn = n.dim;
    Echelon ech(m.p, dm * dn);
    std::vector<std::uint8_t> row(static_cast<std::size_t>(dm) * static_cast<std::size_t>(dn));
    for (std::size_t g = 0; g < m.actors.size(); ++g) {
        const FpMat& a = m.actors[g];
        const FpMat& b = n.actors[g];
        for (int i = 0; i < dm; ++i)
            for (int j = 0; j < dn; ++j) {
                std::fill(row.begin(), row.end(), 0);
                // (a X - X b)[i][j] = sum_k a[i][k] X[k][j] - sum_k X[i][k] b[k][j]
                for (int k = 0; k < dm; ++k)
                    row[static_cast<std::size_t>(k * dn + j)] =
                        static_cast<std::uint8_t>((row[static_cast<std::size_t>(k * dn + j)] + a.at(i, k)) % m.p);
                for (int k = 0; k < dn; ++k)
                    row[static_cast<std::size_t>(i * dn + k)] =
                        static_cast<std::uint8_t>((row[static_cast<std::size_t>(i * dn + k)] + m.p - b.at(k, j)) % m.p);
                ech.insert(row);
            }
    }
    return dm * dn - ech.rank();
}

int h1(const FpModule& m, const H1Options& opt) {
    if (!m.group) throw std::invalid_argument("h1: module has no attached group");
    const PermGroup& g = *m.group;
    if (g.order() > opt.max_group) throw std::invalid_argument("h1: group too large");
    int k = static_cast<int>(m.actors.size());
    int d = m.dim;
    if (k == 0 || d == 0) return 0;
    int kd = k * d;

    // z(x) = u . L[x] for the unknown row u of generator values (length kd)
    std::vector<Permutation> verts{Permutation::identity(g.degree())};
    std::unordered_map<Permutation, int, PermHash> id_of;
    id_of.emplace(verts[0], 0);
    std::vector<FpMat> L{FpMat(m.p, kd, d)};
    Echelon eqs(m.p, kd);
    std::size_t relators = 0;

    std::vector<FpMat> ej;
    for (int j = 0; j < k; ++j) {
        FpMat e(m.p, kd, d);
        for (int r = 0; r < d; ++r) e.at(j * d + r, r) = 1;
        ej.push_back(std::move(e));
    }

    for (std::size_t head = 0; head < verts.size(); ++head) {
        Permutation x = verts[head];  // copy: verts may reallocate below
        for (int j = 0; j < k; ++j) {
            Permutation y = x * g.generators()[static_cast<std::size_t>(j)];
            FpMat ly = fp_add(fp_mul(L[head], m.actors[static_cast<std::size_t>(j)]), ej[static_cast<std::size_t>(j)]);
            auto it = id_of.find(y);
            if (it == id_of.end()) {
                id_of.emplace(y, static_cast<int>(verts.size()));
                verts.push_back(std::move(y));
                L.push_back(std::move(ly));
            } else {
                // z(x g_j) must agree with the stored value: one relator
                if (++relators > opt.max_relators) throw std::invalid_argument("h1: relator budget exceeded");
                FpMat diff = fp_sub(ly, L[static_cast<std::size_t>(it->second)]);
                for (int c = 0; c < d; ++c) {
                    std::vector<std::uint8_t> row(static_cast<std::size_t>(kd));
                    for (int r = 0; r < kd; ++r) row[static_cast<std::size_t>(r)] = diff.at(r, c);
                    eqs.insert(std::move(row));
                }
            }
        }
    }
    if (BigInt(verts.size()) != g.order()) throw std::logic_error("h1: Cayley walk did not close");

    int z1 = kd - eqs.rank();
    // coboundaries: v -> (v a_j - v)_j
    Echelon cob(m.p, kd);
    for (int i = 0; i < d; ++i) {
        std::vector<std::uint8_t> row(static_cast<std::size_t>(kd), 0);
        for (int j = 0; j < k; ++j)
            for (int c = 0; c < d; ++c) {
                int v = m.actors[static_cast<std::size_t>(j)].at(i, c) + (i == c ? m.p - 1 : 0);
                row[static_cast<std::size_t>(j * d + c)] = static_cast<std::uint8_t>(v % m.p);
            }
        cob.insert(std::move(row));
    }
    return z1 - cob.rank();
}

namespace {

// coordinates of w in the row space of the rref basis b; throws if absent
std::vector<std::uint8_t> coords_in_rref(const FpMat& b, std::vector<std::uint8_t> w) {
    std::vector<std::uint8_t> c(static_cast<std::size_t>(b.rows), 0);
    for (int r = 0; r < b.rows; ++r) {
        int piv = -1;
        for (int j = 0; j < b.cols; ++j)
            if (b.at(r, j) != 0) { piv = j; break; }
        if (piv < 0) throw std::logic_error("coords_in_rref: zero basis row");
        std::uint8_t f = w[static_cast<std::size_t>(piv)];
        c[static_cast<std::size_t>(r)] = f;
        if (f == 0) continue;
        for (int j = 0; j < b.cols; ++j)
            w[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
                (w[static_cast<std::size_t>(j)] + (b.p - f) * b.at(r, j)) % b.p);
    }
    if (!std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; }))
        throw std::logic_error("coords_in_rref: vector outside the row space");
    return c;
}

// Particular solution of the affine system rows*x = rhs, or nullopt.
std::optional<std::vector<std::uint8_t>> solve_affine(int p, int ncols,
                                                      const std::vector<std::vector<std::uint8_t>>& rows,
                                                      const std::vector<std::uint8_t>& rhs) {
    FpMat aug(p, static_cast<int>(rows.size()), ncols + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < ncols; ++j) aug.at(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
        aug.at(static_cast<int>(i), ncols) = rhs[i];
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;  // 0 = 1 row
    std::vector<std::uint8_t> x(static_cast<std::size_t>(ncols), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), ncols);
    return x;
}

// Equivariant projection onto the row space of u (rref), or nullopt when no
// invariant complement exists.
std::optional<FpMat> equivariant_projection(const FpModule& m, const FpMat& u) {
    int d = m.dim;
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<std::uint8_t> rhs;
    auto idx = [d](int i, int j) { return static_cast<std::size_t>(i * d + j); };
    // (a) X commutes with every actor
    for (const FpMat& a : m.actors)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::vector<std::uint8_t> row(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
                for (int k = 0; k < d; ++k) {
                    row[idx(i, k)] = static_cast<std::uint8_t>((row[idx(i, k)] + a.at(k, j)) % m.p);
                    row[idx(k, j)] = static_cast<std::uint8_t>((row[idx(k, j)] + m.p - a.at(i, k)) % m.p);
                }
                rows.push_back(std::move(row));
                rhs.push_back(0);
            }
    // (b) X fixes U pointwise: u_r X = u_r
    for (int r = 0; r < u.rows; ++r)
        for (int j = 0; j < d; ++j) {
            std::vector<std::uint8_t> row(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
            for (int k = 0; k < d; ++k) row[idx(k, j)] = u.at(r, k);
            rows.push_back(std::move(row));
            rhs.push_back(u.at(r, j));
        }
    // (c) the image lies in U: X T = 0 for T with U = {v : v T = 0}
    FpMat t = fp_transpose(right_nullspace(u));
    for (int i = 0; i < d; ++i)
        for (int c = 0; c < t.cols; ++c) {
            std::vector<std::uint8_t> row(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
            for (int k = 0; k < d; ++k) row[idx(i, k)] = t.at(k, c);
            rows.push_back(std::move(row));
            rhs.push_back(0);
        }
    std::optional<std::vector<std::uint8_t>> sol = solve_affine(m.p, d * d, rows, rhs);
    if (!sol) return std::nullopt;
    FpMat x(m.p, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) x.at(i, j) = (*sol)[idx(i, j)];
    if (!(fp_mul(x, x) == x)) throw std::logic_error("equivariant_projection: solution is not idempotent");
    return x;
}

}  // namespace

FpModule restrict_to_submodule(const FpModule& m, const FpMat& basis) {
    FpModule r;
    r.p = m.p;
    r.dim = basis.rows;
    r.group = m.group;
    for (const FpMat& a : m.actors) {
        FpMat mat(m.p, basis.rows, basis.rows);
        for (int i = 0; i < basis.rows; ++i) {
            std::vector<std::uint8_t> w = vec_mul(row_of(basis, i), a);
            std::vector<std::uint8_t> c = coords_in_rref(basis, std::move(w));
            for (int j = 0; j < basis.rows; ++j) mat.at(i, j) = c[static_cast<std::size_t>(j)];
        }
        r.actors.push_back(std::move(mat));
    }
    return r;
}

DecompositionReport submodule_decomposition_check(const FpModule& m) {
    DecompositionReport rep;
    std::vector<FpModule> summands;
    std::vector<FpModule> stack{m};
    while (!stack.empty()) {
        FpModule cur = std::move(stack.back());
        stack.pop_back();
        if (cur.dim == 0) continue;
        IrreducibilityReport ir = is_irreducible(cur);
        if (ir.irreducible) {
            summands.push_back(std::move(cur));
            continue;
        }
        std::optional<FpMat> proj = equivariant_projection(cur, ir.witness);
        if (!proj) {
            rep.holds = false;
            rep.reason = "a proper submodule has no invariant complement";
            return rep;
        }
        FpMat complement = fp_left_nullspace(*proj);
        stack.push_back(restrict_to_submodule(cur, ir.witness));
        stack.push_back(restrict_to_submodule(cur, fp_rref(complement)));
    }
    std::sort(summands.begin(), summands.end(),
              [](const FpModule& x, const FpModule& y) { return x.dim < y.dim; });
    for (const FpModule& s : summands) rep.summand_dims.push_back(s.dim);
    for (const FpModule& s : summands)
        if (end_algebra_dim(s) != 1) {
            rep.holds = false;
            rep.reason = "an irreducible summand is not absolutely irreducible";
            return rep;
        }
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = i + 1; j < summands.size(); ++j)
            if (hom_space_dim(summands[i], summands[j]) != 0) {
                rep.holds = false;
                rep.reason = "two summands are isomorphic";
                return rep;
            }
    rep.holds = true;
    rep.reason = "splits into absolutely irreducible pairwise nonisomorphic summands";
    return rep;
}

DecompositionReport submodule_decomposition_check(const FpModule& m,
                                                  const std::vector<int>& actor_subset) {
    FpModule r;
    r.p = m.p;
    r.dim = m.dim;
    for (int i : actor_subset) r.actors.push_back(m.actors.at(static_cast<std::size_t>(i)));
    return submodule_decomposition_check(r);
}

}  // namespace ff
