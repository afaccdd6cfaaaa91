#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hqc/enumerators.hpp"
#include "hqc/errors.hpp"

namespace hqc {

struct LPInstance {
    std::size_t n = 0;
    mpz_class K = 1;   // dimension of each inner code
    mpz_class M = 1;   // number of inner codes
    std::size_t d = 1;  // distance whose feasibility is tested
    unsigned q = 2;
    bool shadow = true;   // shadow positivity rows, qubit alphabets only
    bool nested = false;  // aggregate distribution bounded by the diagonal one
};

struct Constraint {
    std::vector<mpq_class> a;
    mpq_class rhs;
    bool equality = true;  // false means a.x >= rhs
    std::string label;
};

struct ConstraintSystem {
    std::vector<std::string> vars;
    std::vector<Constraint> rows;
};

// Variable blocks: diagonal pair class (D), off-diagonal pair class (O when
// M > 1), each with an A row and a B row indexed by weight.
struct VarLayout {
    std::size_t n = 0;
    bool has_o = false;

    std::size_t ad(std::size_t j) const { return j; }
    std::size_t ao(std::size_t j) const { return (n + 1) + j; }
    std::size_t bd(std::size_t j) const { return (has_o ? 2 : 1) * (n + 1) + j; }
    std::size_t bo(std::size_t j) const { return 3 * (n + 1) + j; }
    std::size_t count() const { return (has_o ? 4 : 2) * (n + 1); }
};

inline VarLayout layout_for(const LPInstance& inst) {
    return VarLayout{inst.n, inst.M > 1};
}

inline ConstraintSystem build_constraints(const LPInstance& inst) {
    if (inst.d < 1 || inst.d > inst.n + 1) throw std::invalid_argument("build_constraints: bad d");
    if (inst.K < 1 || inst.M < 1) throw std::invalid_argument("build_constraints: bad K or M");
    if (inst.shadow && inst.q != 2) throw ShadowUndefinedForQ(inst.q);
    VarLayout L = layout_for(inst);
    std::size_t n = inst.n;

    ConstraintSystem sys;
    sys.vars.resize(L.count());
    for (std::size_t j = 0; j <= n; ++j) {
        sys.vars[L.ad(j)] = "AD[" + std::to_string(j) + "]";
        sys.vars[L.bd(j)] = "BD[" + std::to_string(j) + "]";
        if (L.has_o) {
            sys.vars[L.ao(j)] = "AO[" + std::to_string(j) + "]";
            sys.vars[L.bo(j)] = "BO[" + std::to_string(j) + "]";
        }
    }

    auto fresh = [&]() { return std::vector<mpq_class>(L.count(), 0); };
    auto push_eq = [&](std::vector<mpq_class> a, mpq_class rhs, std::string label) {
        sys.rows.push_back({std::move(a), std::move(rhs), true, std::move(label)});
    };
    auto push_ge = [&](std::vector<mpq_class> a, mpq_class rhs, std::string label) {
        sys.rows.push_back({std::move(a), std::move(rhs), false, std::move(label)});
    };

    mpq_class invm(1, inst.M);
    invm.canonicalize();
    mpq_class om(inst.M - 1, inst.M);  // (M-1)/M
    om.canonicalize();

    {
        auto a = fresh();
        a[L.ad(0)] = 1;
        push_eq(std::move(a), 1, "AD[0] = 1");
    }
    if (L.has_o) {
        auto a = fresh();
        a[L.ao(0)] = 1;
        push_eq(std::move(a), 1, "AO[0] = 1");
    }
    {
        auto a = fresh();
        a[L.bd(0)] = 1;
        push_eq(std::move(a), 1, "BD[0] = 1");
    }
    if (L.has_o) {
        auto a = fresh();
        a[L.bo(0)] = 1;
        push_eq(std::move(a), 0, "BO[0] = 0");
    }
    for (std::size_t j = 0; j < inst.d; ++j) {
        auto a = fresh();
        a[L.ad(j)] = 1;
        a[L.bd(j)] = -1;
        push_eq(std::move(a), 0, "AD[" + std::to_string(j) + "] = BD[" + std::to_string(j) + "]");
    }
    if (L.has_o)
        for (std::size_t j = 0; j < inst.d; ++j) {
            auto a = fresh();
            a[L.bo(j)] = 1;
            push_eq(std::move(a), 0, "BO[" + std::to_string(j) + "] = 0");
        }
    for (std::size_t j = 0; j <= n; ++j) {
        auto a = fresh();
        a[L.ad(j)] = 1;
        push_ge(std::move(a), 0, "AD[" + std::to_string(j) + "] >= 0");
        auto b = fresh();
        b[L.bd(j)] = 1;
        b[L.ad(j)] = -1;
        push_ge(std::move(b), 0, "BD[" + std::to_string(j) + "] >= AD[" + std::to_string(j) + "]");
    }
    if (L.has_o)
        for (std::size_t j = 0; j <= n; ++j) {
            auto a = fresh();
            a[L.ad(j)] = invm;
            a[L.ao(j)] = om;
            push_ge(std::move(a), 0, "A[" + std::to_string(j) + "] >= 0");
            auto b = fresh();
            b[L.bd(j)] = 1;
            b[L.bo(j)] = mpq_class(inst.M - 1);
            b[L.ad(j)] = -invm;
            b[L.ao(j)] = -om;
            push_ge(std::move(b), 0, "B[" + std::to_string(j) + "] >= A[" + std::to_string(j) + "]");
        }
    for (std::size_t j = 0; j <= n; ++j) {
        auto a = fresh();
        a[L.bd(j)] = 1;
        push_ge(std::move(a), 0, "BD[" + std::to_string(j) + "] >= 0");
        if (L.has_o) {
            auto b = fresh();
            b[L.bo(j)] = 1;
            push_ge(std::move(b), 0, "BO[" + std::to_string(j) + "] >= 0");
        }
    }

    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), inst.q, static_cast<unsigned long>(n));
    mpq_class kq(inst.K, qn);
    kq.canonicalize();
    for (std::size_t j = 0; j <= n; ++j) {
        auto a = fresh();
        a[L.bd(j)] += 1;
        for (std::size_t r = 0; r <= n; ++r)
            a[L.ad(r)] -= kq * mpq_class(krawtchouk(inst.q, n, j, r));
        push_eq(std::move(a), 0, "BD[" + std::to_string(j) + "] transform");
        if (L.has_o) {
            auto b = fresh();
            b[L.bo(j)] += 1;
            for (std::size_t r = 0; r <= n; ++r)
                b[L.ao(r)] -= kq * mpq_class(krawtchouk(inst.q, n, j, r));
            push_eq(std::move(b), 0, "BO[" + std::to_string(j) + "] transform");
        }
    }

    if (inst.shadow)
        for (std::size_t j = 0; j <= n; ++j) {
            auto a = fresh();
            for (std::size_t r = 0; r <= n; ++r) {
                mpq_class term(krawtchouk(inst.q, n, j, r));
                a[L.ad(r)] += (r & 1) ? -term : term;
            }
            push_ge(std::move(a), 0, "shadow D[" + std::to_string(j) + "]");
            if (L.has_o) {
                auto b = fresh();
                for (std::size_t r = 0; r <= n; ++r) {
                    mpq_class term(krawtchouk(inst.q, n, j, r));
                    b[L.ao(r)] += (r & 1) ? -term : term;
                }
                push_ge(std::move(b), 0, "shadow O[" + std::to_string(j) + "]");
            }
        }

    if (inst.nested && L.has_o)
        for (std::size_t j = 0; j <= n; ++j) {
            auto a = fresh();
            a[L.ad(j)] = 1 - invm;
            a[L.ao(j)] = -om;
            push_ge(std::move(a), 0, "AD[" + std::to_string(j) + "] >= A[" + std::to_string(j) + "]");
        }

    return sys;
}

inline bool verify_witness(const ConstraintSystem& sys, const std::vector<mpq_class>& x) {
    if (x.size() != sys.vars.size()) return false;
    for (const auto& row : sys.rows) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (row.a[j] != 0) acc += row.a[j] * x[j];
        if (row.equality ? acc != row.rhs : acc < row.rhs) return false;
    }
    return true;
}

// Farkas certificate u for the original rows: nonnegative on inequality rows,
// the combined coefficient of every variable cancels, and u.rhs > 0.
inline bool verify_certificate(const ConstraintSystem& sys, const std::vector<mpq_class>& u) {
    if (u.size() != sys.rows.size()) return false;
    mpq_class value = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!sys.rows[i].equality && u[i] < 0) return false;
        value += u[i] * sys.rows[i].rhs;
    }
    if (value <= 0) return false;
    for (std::size_t j = 0; j < sys.vars.size(); ++j) {
        mpq_class acc = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (sys.rows[i].a[j] != 0) acc += u[i] * sys.rows[i].a[j];
        if (acc != 0) return false;
    }
    return true;
}

namespace detail {

struct PhaseOneOutcome {
    bool feasible = false;
    std::vector<mpq_class> x;  // variable values when feasible
    std::vector<mpq_class> u;  // certificate for original rows when infeasible
};

// Exact phase-one simplex with Bland's rule over free variables split as
// p - q, one slack per inequality, one artificial per row.
inline PhaseOneOutcome solve_phase_one(const ConstraintSystem& sys) {
    std::size_t nvar = sys.vars.size();
    std::size_t m = sys.rows.size();
    std::size_t nslack = 0;
    for (const auto& r : sys.rows)
        if (!r.equality) ++nslack;

    std::size_t slack_off = 2 * nvar;
    std::size_t art_off = slack_off + nslack;
    std::size_t ncols = art_off + m;

    std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(ncols + 1, 0));
    std::vector<int> sigma(m, 1);
    {
        std::size_t si = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const Constraint& row = sys.rows[i];
            int sg = row.rhs < 0 ? -1 : 1;
            sigma[i] = sg;
            for (std::size_t j = 0; j < nvar; ++j) {
                mpq_class v = row.a[j] * sg;
                t[i][2 * j] = v;
                t[i][2 * j + 1] = -v;
            }
            if (!row.equality) {
                t[i][slack_off + si] = -sg;
                ++si;
            }
            t[i][art_off + i] = 1;
            t[i][ncols] = row.rhs * sg;
        }
    }

    std::vector<std::size_t> basis(m);
    std::vector<mpq_class> rc(ncols, 0);
    for (std::size_t i = 0; i < m; ++i) basis[i] = art_off + i;
    for (std::size_t j = 0; j < ncols; ++j) {
        mpq_class acc = (j >= art_off) ? 1 : 0;
        for (std::size_t i = 0; i < m; ++i) acc -= t[i][j];
        rc[j] = acc;
    }

    // Most-negative-cost entering with the lexicographic ratio test: rows tie
    // on the rhs ratio, then on the inverse-basis columns, which are linearly
    // independent, so the tie always breaks and no basis can repeat.
    // Artificial columns never re-enter; that leaves the phase-one optimum and
    // the dual untouched.
    auto lex_less = [&](std::size_t i1, std::size_t i2, std::size_t col) {
        mpq_class l = t[i1][ncols] * t[i2][col], r = t[i2][ncols] * t[i1][col];
        for (std::size_t c = art_off; l == r && c < ncols; ++c) {
            l = t[i1][c] * t[i2][col];
            r = t[i2][c] * t[i1][col];
        }
        return l < r;
    };
    for (std::size_t iter = 0;; ++iter) {
        if (iter > 200000) throw std::logic_error("solve_phase_one: iteration cap hit");
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < art_off; ++j)
            if (rc[j] < 0 && (enter == ncols || rc[j] < rc[enter])) enter = j;
        if (enter == ncols) break;
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m || lex_less(i, leave, enter)) leave = i;
        }
        if (leave == m) throw std::logic_error("solve_phase_one: unbounded phase-one objective");

        mpq_class inv = 1 / t[leave][enter];
        for (auto& v : t[leave]) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            mpq_class f = t[i][enter];
            for (std::size_t j = 0; j <= ncols; ++j)
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
        }
        if (rc[enter] != 0) {
            mpq_class f = rc[enter];
            for (std::size_t j = 0; j < ncols; ++j)
                if (t[leave][j] != 0) rc[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    mpq_class w = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= art_off) w += t[i][ncols];

    PhaseOneOutcome out;
    if (w == 0) {
        out.feasible = true;
        out.x.assign(nvar, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < 2 * nvar) {
                std::size_t v = basis[i] / 2;
                if (basis[i] % 2 == 0)
                    out.x[v] += t[i][ncols];
                else
                    out.x[v] -= t[i][ncols];
            }
        }
    } else {
        out.feasible = false;
        out.u.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            mpq_class y = 1 - rc[art_off + i];
            out.u[i] = sigma[i] * y;
        }
    }
    return out;
}

}  // namespace detail

struct LPResult {
    bool feasible = false;
    ConstraintSystem system;
    std::vector<mpq_class> witness;      // satisfies every row when feasible
    std::vector<mpq_class> certificate;  // Farkas multipliers when infeasible
};

inline LPResult lp_feasible(const LPInstance& inst) {
    LPResult r;
    r.system = build_constraints(inst);
    detail::PhaseOneOutcome out = detail::solve_phase_one(r.system);
    r.feasible = out.feasible;
    if (out.feasible) {
        r.witness = std::move(out.x);
        if (!verify_witness(r.system, r.witness))
            throw std::logic_error("lp_feasible: witness failed verification");
    } else {
        r.certificate = std::move(out.u);
        if (!verify_certificate(r.system, r.certificate))
            throw std::logic_error("lp_feasible: certificate failed verification");
    }
    return r;
}

// Symmetrized distributions of a computed code, ordered to match the layout.
inline std::vector<mpq_class> symmetrized_point(const WeightDistributionSet& w) {
    VarLayout L{w.n, w.M > 1};
    std::vector<mpq_class> x(L.count(), 0);
    mpq_class m(static_cast<unsigned long>(w.M));
    for (std::size_t j = 0; j <= w.n; ++j) {
        mpq_class ad = 0, ao = 0, bd = 0, bo = 0;
        for (std::size_t a = 0; a < w.M; ++a)
            for (std::size_t b = 0; b < w.M; ++b) {
                if (a == b) {
                    ad += w.pairs[a][a].A[j];
                    bd += w.pairs[a][a].B[j];
                } else {
                    ao += w.pairs[a][b].A[j];
                    bo += w.pairs[a][b].B[j];
                }
            }
        x[L.ad(j)] = ad / m;
        x[L.bd(j)] = bd / m;
        if (L.has_o) {
            mpq_class pairs = m * (m - 1);
            x[L.ao(j)] = ao / pairs;
            x[L.bo(j)] = bo / pairs;
        }
    }
    return x;
}

struct SweepEntry {
    std::size_t n = 0, k = 0, m = 0;
    bool feasible = false;
};

// Feasibility over all stabilizer-shaped splits 2^k * 2^m <= 2^n.
inline std::vector<SweepEntry> sweep_stabilizer(std::size_t n, std::size_t d, unsigned q = 2,
                                                bool shadow = true, bool nested = true) {
    std::vector<SweepEntry> out;
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t m = 0; k + m <= n; ++m) {
            LPInstance inst;
            inst.n = n;
            inst.K = mpz_class(1) << k;
            inst.M = mpz_class(1) << m;
            inst.d = d;
            inst.q = q;
            inst.shadow = shadow && q == 2;
            inst.nested = nested;
            out.push_back({n, k, m, lp_feasible(inst).feasible});
        }
    return out;
}

}  // namespace hqc
