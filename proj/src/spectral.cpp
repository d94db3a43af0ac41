#include "darboux/darboux.hpp"

namespace darboux {

namespace {

// Sparse-to-dense coordinates for operators: numerator coefficients over a
// common denominator, indexed by (derivative order, x power).
struct OpCoords {
    std::map<std::pair<size_t, size_t>, size_t> index;
    UniPoly lcm;

    explicit OpCoords(const std::string& var)
        : lcm(UniPoly::constant(var, Scalar(1))) {}

    void widen(const DiffOp& r) {
        for (const auto& c : r.coeffs())
            if (!c.is_zero()) lcm = poly_lcm(lcm, c.den());
    }
    std::vector<std::pair<size_t, Scalar>> vec(const DiffOp& r) {
        std::vector<std::pair<size_t, Scalar>> sparse;
        for (size_t k = 0; k < r.coeffs().size(); ++k) {
            if (r.coeffs()[k].is_zero()) continue;
            UniPoly num = (r.coeffs()[k] * RatFun::of(lcm)).to_polynomial();
            for (size_t pw = 0; pw < num.coeffs().size(); ++pw) {
                if (num.coeffs()[pw].is_zero()) continue;
                auto key = std::make_pair(k, pw);
                auto it = index.find(key);
                size_t id;
                if (it == index.end()) {
                    id = index.size();
                    index.emplace(key, id);
                } else {
                    id = it->second;
                }
                sparse.emplace_back(id, num.coeffs()[pw]);
            }
        }
        return sparse;
    }
};

// Candidate monic u of degree d preserving ker P, via remainders of P L^j.
// Unknowns are ordered [c_{d-1}, ..., c_0] so zeroed free variables favor
// the shortest tail.
std::optional<UniPoly> division_candidate(const std::vector<DiffOp>& rems,
                                          unsigned d,
                                          const std::string& var) {
    OpCoords coords(var);
    for (unsigned j = 0; j <= d; ++j) coords.widen(rems[j]);
    std::vector<std::vector<std::pair<size_t, Scalar>>> cols;
    for (unsigned j = 0; j < d; ++j) cols.push_back(coords.vec(rems[j]));
    auto rhs = coords.vec(rems[d]);
    size_t dim = coords.index.size();
    Matrix a(dim, std::vector<Scalar>(d, Scalar(0)));
    std::vector<Scalar> b(dim, Scalar(0));
    for (unsigned j = 0; j < d; ++j)
        for (auto& [id, v] : cols[j]) a[id][d - 1 - j] = v;
    for (auto& [id, v] : rhs) b[id] = -v;
    auto sol = solve(a, b);
    if (!sol) return std::nullopt;
    std::vector<Scalar> cs(d + 1, Scalar(0));
    cs[d] = Scalar(1);
    for (unsigned j = 0; j < d; ++j) cs[j] = (*sol)[d - 1 - j];
    return UniPoly("t", std::move(cs));
}

// ---- matrix route: exact action of L_V on a finite model space ----

struct ModelBasisKey {
    int block;  // -1 zero block, >= 0 condition index
    Rational value;
    unsigned logpow = 0;
    unsigned jet = 0;
    bool operator<(const ModelBasisKey& o) const {
        if (block != o.block) return block < o.block;
        if (value != o.value) return value < o.value;
        if (logpow != o.logpow) return logpow < o.logpow;
        return jet < o.jet;
    }
};

struct Model {
    std::map<ModelBasisKey, size_t> index;
    Matrix t;                  // action of L_V
    Matrix kernel;             // kernel vectors as rows
};

// multiplicity of v in beta^{cap}
unsigned mult_cap(const BesselParam& p, const Rational& v, unsigned cap) {
    unsigned m = 0;
    for (const auto& b : p.beta()) {
        Rational d = v - b;
        if (d.get_den() == 1 && d.get_num() >= 0 &&
            d.get_num() % static_cast<long>(p.n()) == 0 &&
            d.get_num() / p.n() < cap)
            ++m;
    }
    return m;
}

Model build_model(const DarbouxPlane& pl, unsigned deg_cap) {
    if (!pl.conditions)
        throw DomainError("matrix membership requires an explicit condition set");
    const ConditionSet& cs = *pl.conditions;
    Model m;

    if (cs.family() == ConditionSet::Family::Bessel) {
        const BesselParam& bp = cs.bessel();
        unsigned kmax = 0;
        bool has_zero = false;
        for (const auto& c : cs.conditions()) {
            if (c.support != Condition::Support::Zero) continue;
            has_zero = true;
            for (const auto& t : c.terms) kmax = std::max(kmax, t.k);
        }
        if (has_zero) {
            unsigned cap = kmax + 1 + deg_cap;  // closed under L^{deg}
            for (const auto& b : bp.beta())
                for (unsigned k = 0; k < cap; ++k) {
                    Rational v = b + Rational(static_cast<long>(k) *
                                              static_cast<long>(bp.n()));
                    unsigned mult = mult_cap(bp, v, cap);
                    for (unsigned j = 0; j < mult; ++j) {
                        ModelBasisKey key{-1, v, j, 0};
                        if (!m.index.count(key))
                            m.index.emplace(key, m.index.size());
                    }
                }
        }
    }
    for (size_t ci = 0; ci < cs.conditions().size(); ++ci) {
        const auto& c = cs.conditions()[ci];
        if (c.support != Condition::Support::Point) continue;
        unsigned kmax = static_cast<unsigned>(c.coeffs.size()) - 1;
        for (unsigned k = 0; k <= kmax; ++k) {
            ModelBasisKey key{static_cast<int>(ci), c.lambda, 0, k};
            m.index.emplace(key, m.index.size());
        }
    }

    size_t dim = m.index.size();
    m.t.assign(dim, std::vector<Scalar>(dim, Scalar(0)));
    for (const auto& [key, col] : m.index) {
        if (key.block == -1) {
            const BesselParam& bp = cs.bessel();
            for (const auto& term :
                 bessel_action_zero(bp, key.value, key.logpow)) {
                ModelBasisKey dst{-1, term.exponent, term.logpow, 0};
                auto it = m.index.find(dst);
                if (it == m.index.end()) {
                    if (term.coeff.is_zero()) continue;
                    throw DomainError("model space not closed under L");
                }
                m.t[it->second][col] += term.coeff;
            }
            continue;
        }
        const auto& c = cs.conditions()[static_cast<size_t>(key.block)];
        Scalar lam(c.lambda);
        if (cs.family() == ConditionSet::Family::Bessel) {
            // L d_z^k Psi|_lam = sum_j binom(k,j) (N)_j lam^{N-j} d_z^{k-j}
            unsigned n = cs.n();
            Rational binom(1);
            Scalar lpow(1);
            for (unsigned i = 0; i < n; ++i) lpow *= lam;
            for (unsigned j = 0; j <= std::min(key.jet, n); ++j) {
                ModelBasisKey dst{key.block, key.value, 0, key.jet - j};
                auto it = m.index.find(dst);
                if (it != m.index.end())
                    m.t[it->second][col] += Scalar(binom) * lpow;
                binom = binom * Rational(static_cast<long>(key.jet - j)) /
                        Rational(static_cast<long>(j + 1));
                Scalar fall(static_cast<long>(n - j));
                lpow = lpow * fall / lam;
            }
        } else {
            // L d_y^k Psi = lam^N d^k + k alpha0 d^{k-1}
            const AiryParam& ap = cs.airy();
            Scalar lpow(1);
            for (unsigned i = 0; i < cs.n(); ++i) lpow *= lam;
            m.t[m.index.at(key)][col] += lpow;
            if (key.jet >= 1) {
                ModelBasisKey dst{key.block, key.value, 0, key.jet - 1};
                m.t[m.index.at(dst)][col] +=
                    Scalar(ap.alpha0()) * Scalar(static_cast<long>(key.jet));
            }
        }
    }

    // kernel vectors
    for (size_t ci = 0; ci < cs.conditions().size(); ++ci) {
        const auto& c = cs.conditions()[ci];
        if (c.support == Condition::Support::Zero) {
            unsigned j0 = 0;
            for (const auto& t : c.terms) j0 = std::max(j0, t.j);
            const BesselParam& bp = cs.bessel();
            for (unsigned l = 0; l <= j0; ++l) {
                std::vector<Scalar> row(dim, Scalar(0));
                for (const auto& t : c.terms) {
                    if (t.j < l) continue;
                    Scalar fac(1);
                    for (unsigned u = 0; u < l; ++u)
                        fac *= Scalar(static_cast<long>(t.j - u));
                    Rational v = bp.beta()[t.i - 1] +
                                 Rational(static_cast<long>(t.k) *
                                          static_cast<long>(bp.n()));
                    ModelBasisKey key{-1, v, t.j - l, 0};
                    row[m.index.at(key)] += t.b * fac;
                }
                m.kernel.push_back(std::move(row));
            }
        } else {
            std::vector<Scalar> row(dim, Scalar(0));
            for (size_t k = 0; k < c.coeffs.size(); ++k) {
                ModelBasisKey key{static_cast<int>(ci), c.lambda, 0,
                                  static_cast<unsigned>(k)};
                row[m.index.at(key)] = c.coeffs[k];
            }
            m.kernel.push_back(std::move(row));
        }
    }
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    Matrix out(n, std::vector<Scalar>(mcols, Scalar(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t c = 0; c < mcols; ++c)
                out[i][c] += a[i][j] * b[j][c];
        }
    return out;
}

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(a.size(), Scalar(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
    return out;
}

// Candidate u via the model-space route: unknowns [c_{d-1},...,c_0, mu...].
std::optional<UniPoly> matrix_candidate(const Model& model, unsigned d) {
    size_t dim = model.t.empty() ? 0 : model.t.size();
    size_t nker = model.kernel.size();
    // powers of T applied to kernel vectors
    std::vector<std::vector<std::vector<Scalar>>> tk(d + 1);
    tk[0] = model.kernel;
    for (unsigned j = 1; j <= d; ++j) {
        tk[j].clear();
        for (const auto& v : tk[j - 1]) tk[j].push_back(mat_vec(model.t, v));
    }
    size_t nvars = d + nker * nker;
    Matrix a(dim * nker, std::vector<Scalar>(nvars, Scalar(0)));
    std::vector<Scalar> b(dim * nker, Scalar(0));
    for (size_t i = 0; i < nker; ++i)
        for (size_t r = 0; r < dim; ++r) {
            size_t row = i * dim + r;
            for (unsigned j = 0; j < d; ++j) a[row][d - 1 - j] = tk[j][i][r];
            for (size_t s = 0; s < nker; ++s)
                a[row][d + i * nker + s] = -model.kernel[s][r];
            b[row] = -tk[d][i][r];
        }
    auto sol = solve(a, b);
    if (!sol) return std::nullopt;
    std::vector<Scalar> cs(d + 1, Scalar(0));
    cs[d] = Scalar(1);
    for (unsigned j = 0; j < d; ++j) cs[j] = (*sol)[d - 1 - j];
    return UniPoly("t", std::move(cs));
}

}  // namespace

bool preserves_kernel_division(const DarbouxPlane& pl, const UniPoly& u) {
    const std::string var = pl.p.var();
    DiffOp l = base_operator(pl, var);
    DiffOp pu = op_mul(pl.p, op_of_poly(u.with_var("z"), l));
    return op_right_divide(pu, pl.p).second.is_zero();
}

bool preserves_kernel_matrix(const DarbouxPlane& pl, const UniPoly& u) {
    unsigned d = u.deg() < 0 ? 0 : static_cast<unsigned>(u.deg());
    Model model = build_model(pl, d);
    // check u(T) k_i in span(kernel)
    size_t dim = model.t.size();
    (void)dim;
    for (const auto& k : model.kernel) {
        // u(T) k by Horner
        std::vector<Scalar> acc(k.size(), Scalar(0));
        for (size_t i = u.coeffs().size(); i-- > 0;) {
            acc = mat_vec(model.t, acc);
            if (!u.coeffs()[i].is_zero())
                for (size_t j = 0; j < k.size(); ++j)
                    acc[j] += u.coeffs()[i] * k[j];
        }
        if (!in_row_span(model.kernel, acc)) return false;
    }
    return true;
}

std::optional<MinimalL> minimal_L(const DarbouxPlane& pl, unsigned max_deg) {
    const std::string var = pl.p.var();
    DiffOp l = base_operator(pl, var);
    for (unsigned d = 1; d <= max_deg; ++d) {
        std::optional<UniPoly> u;
        if (pl.conditions) {
            Model model = build_model(pl, d);
            u = matrix_candidate(model, d);
        } else {
            std::vector<DiffOp> rems;
            DiffOp lj = DiffOp::identity(var);
            for (unsigned j = 0; j <= d; ++j) {
                rems.push_back(op_right_divide(op_mul(pl.p, lj), pl.p).second);
                lj = op_mul(lj, l);
            }
            u = division_candidate(rems, d, var);
        }
        if (!u) continue;
        DiffOp pu = op_mul(pl.p, op_of_poly(u->with_var("z"), l));
        auto [q, r] = op_right_divide(pu, pl.p);
        if (!r.is_zero())
            throw DomainError("membership candidate failed right division");
        return MinimalL{*u, q};
    }
    return std::nullopt;
}

std::vector<SpectralEntry> spectral_algebra(const DarbouxPlane& pl,
                                            unsigned max_order) {
    std::vector<SpectralEntry> out;
    const std::string var = pl.p.var();
    DiffOp l = base_operator(pl, var);
    unsigned n = pl.n();
    std::vector<DiffOp> rems;
    DiffOp lj = DiffOp::identity(var);
    for (unsigned d = 1; d * n <= max_order; ++d) {
        std::optional<UniPoly> u;
        if (pl.conditions) {
            Model model = build_model(pl, d);
            u = matrix_candidate(model, d);
        } else {
            while (rems.size() <= d) {
                rems.push_back(op_right_divide(op_mul(pl.p, lj), pl.p).second);
                lj = op_mul(lj, l);
            }
            u = division_candidate(rems, d, var);
        }
        if (u) out.push_back({*u, d * n});
    }
    return out;
}

}  // namespace darboux
