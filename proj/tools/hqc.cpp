// Command-line front end: verification reports, enumerator and LP reports,
// family generation, feasibility sweeps.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hqc/codefile.hpp"
#include "hqc/dense.hpp"
#include "hqc/enumerators.hpp"
#include "hqc/errors.hpp"
#include "hqc/families.hpp"
#include "hqc/hybrid.hpp"
#include "hqc/lp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

bool g_kv = false;

std::string frac(const mpq_class& v) { return v.get_str(); }

std::string join_fracs(const std::vector<mpq_class>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += " ";
        out += frac(vs[i]);
    }
    return out;
}

void emit(const std::string& key, const std::string& value) {
    if (g_kv)
        std::cout << key << " = " << value << "\n";
    else
        std::cout << key << ": " << value << "\n";
}

std::string distance_string(const hqc::DistanceResult& dr) {
    if (dr.exact()) return std::to_string(dr.found->weight);
    return ">=" + std::to_string(dr.value());
}

hqc::DeclaredParams union_params(const hqc::StabilizerUnionCode& u,
                                 std::optional<std::size_t> d) {
    hqc::DeclaredParams p;
    p.stabilizer_form = false;
    p.n = u.n;
    std::size_t r = u.inner[0].rank();
    p.K = (u.n - r) < 64 ? (1ULL << (u.n - r)) : 0;
    p.M = u.M();
    p.d = d;
    return p;
}

int cmd_verify(const std::string& path, std::size_t w_max, bool dense, int threads) {
    hqc::CodeFile cf = hqc::parse_code_file(path);

    if (cf.union_form()) {
        hqc::StabilizerUnionCode u = hqc::to_union(cf);
        hqc::DistanceResult dr = hqc::union_distance_dense(u, w_max);
        hqc::DeclaredParams p = union_params(u, dr.exact() ? dr.found->weight
                                                           : std::optional<std::size_t>{});
        emit("code", hqc::format_declared(p));
        emit("distance", distance_string(dr));
        if (dr.exact()) emit("witness", hqc::to_string(dr.found->witness));
        emit("inner codes pairwise orthogonal", "yes");
        if (!cf.declared) return kExitOk;
        const auto& d = *cf.declared;
        bool match = d.n == u.n && d.K == p.K && d.M == p.M &&
                     (!d.d || (dr.exact() && *d.d == static_cast<std::size_t>(dr.found->weight)));
        if (!match) {
            emit("declared", hqc::format_declared(d));
            emit("verified", "no");
            return kExitMismatch;
        }
        std::cout << hqc::format_declared(d) << " verified\n";
        return kExitOk;
    }

    hqc::HybridCode h = hqc::to_hybrid(cf);
    std::size_t scan_max = w_max;
    if (cf.declared && cf.declared->d && *cf.declared->d > scan_max) scan_max = *cf.declared->d;
    hqc::DistanceResult dr = hqc::distance(h, scan_max, threads);

    hqc::DeclaredParams p =
        hqc::computed_params(h, dr.exact() ? dr.found->weight : std::optional<std::size_t>{});
    emit("code", hqc::format_declared(p));
    emit("distance", distance_string(dr));
    if (dr.exact()) emit("witness", hqc::to_string(dr.found->witness));

    if (h.m() > 0 && h.m() <= 12) {
        hqc::as_union(h);  // throws unless inner codes are pairwise orthogonal
        emit("inner codes pairwise orthogonal",
             "yes (M=" + std::to_string(std::size_t{1} << h.m()) + ")");
    }
    std::string degen;
    if (dr.exact()) {
        hqc::DegeneracyResult dg = hqc::inner_degenerate(h, dr.found->weight);
        if (dg.degenerate()) {
            degen = "inner code degenerate (witness " + hqc::to_string(*dg.witness) + ")";
            emit("degenerate", "yes");
            emit("degeneracy witness", hqc::to_string(*dg.witness));
        } else {
            degen = "inner code nondegenerate";
            emit("degenerate", "no");
        }
    }
    if (dense) {
        hqc::DistanceResult dd = hqc::union_distance_dense(hqc::as_union(h), scan_max);
        emit("dense distance", distance_string(dd));
        if (dd.exact() != dr.exact() || (dr.exact() && dd.found->weight != dr.found->weight))
            throw std::logic_error("dense cross-check disagrees with symplectic scan");
        emit("dense cross-check", "agrees");
    }

    if (!cf.declared) return kExitOk;
    const auto& d = *cf.declared;
    bool match = d.n == h.n && (!d.d || (dr.exact() && *d.d == static_cast<std::size_t>(dr.found->weight)));
    if (d.stabilizer_form)
        match = match && d.k == h.k() && d.m == h.m();
    else
        match = match && d.K == p.K && d.M == p.M;
    if (!match) {
        emit("declared", hqc::format_declared(d));
        emit("verified", "no");
        return kExitMismatch;
    }
    std::cout << hqc::format_declared(d) << " verified";
    if (!degen.empty()) std::cout << "; " << degen;
    std::cout << "\n";
    return kExitOk;
}

int cmd_enumerate(const std::string& path, bool dense) {
    hqc::CodeFile cf = hqc::parse_code_file(path);
    hqc::StabilizerUnionCode u = hqc::to_union(cf);
    hqc::WeightDistributionSet w =
        dense ? hqc::weight_distributions_dense(u) : hqc::all_pair_distributions(u);

    emit("n", std::to_string(w.n));
    emit("K", w.K.get_str());
    emit("M", std::to_string(w.M));
    for (std::size_t a = 0; a < w.M; ++a)
        for (std::size_t b = 0; b < w.M; ++b) {
            std::string tag = "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
            emit("A" + tag, join_fracs(w.pairs[a][b].A));
            emit("B" + tag, join_fracs(w.pairs[a][b].B));
        }
    emit("aggregate A", join_fracs(w.A));
    emit("aggregate B", join_fracs(w.B));

    mpq_class residual = 0;
    for (std::size_t a = 0; a < w.M; ++a)
        for (std::size_t b = 0; b < w.M; ++b) {
            std::vector<mpq_class> t = hqc::macwilliams(w.pairs[a][b].A, mpq_class(w.K), 2, w.n);
            for (std::size_t j = 0; j <= w.n; ++j) residual += abs(t[j] - w.pairs[a][b].B[j]);
        }
    {
        std::vector<mpq_class> t =
            hqc::macwilliams(w.A, mpq_class(w.K) * mpq_class(static_cast<unsigned long>(w.M)), 2, w.n);
        for (std::size_t j = 0; j <= w.n; ++j) residual += abs(t[j] - w.B[j]);
    }
    emit("macwilliams residual", frac(residual));
    if (residual != 0) throw std::logic_error("MacWilliams identity violated");

    emit("shadow", join_fracs(hqc::shadow_values(w.A, 2, w.n)));
    emit("distance_from_enumerators", std::to_string(hqc::distance_from_enumerators(w)));
    return kExitOk;
}

int cmd_lp(const hqc::LPInstance& inst, const std::string& shown) {
    std::ostringstream desc;
    desc << shown << " (K=" << inst.K.get_str() << ", M=" << inst.M.get_str()
         << ", d=" << inst.d << ", q=" << inst.q << ", shadow=" << (inst.shadow ? "on" : "off")
         << ", nested=" << (inst.nested ? "on" : "off") << ")";
    emit("instance", desc.str());

    hqc::LPResult r = hqc::lp_feasible(inst);
    if (r.feasible) {
        std::cout << "Feasible\n";
        for (std::size_t j = 0; j < r.system.vars.size(); ++j)
            if (r.witness[j] != 0) emit("  " + r.system.vars[j], frac(r.witness[j]));
        emit("witness", "verified exact");
        return kExitOk;
    }
    std::cout << "Infeasible\n";
    for (std::size_t i = 0; i < r.system.rows.size(); ++i)
        if (r.certificate[i] != 0) emit("  " + r.system.rows[i].label, frac(r.certificate[i]));
    emit("certificate", "verified exact");
    return kExitMismatch;
}

int cmd_family(const std::string& kind, std::size_t n, unsigned j, std::size_t m, std::size_t a,
               std::size_t w_max, const std::string& out, int threads) {
    std::optional<hqc::HybridCode> h;
    if (kind == "dist2") {
        h = hqc::dist2_family(n);
    } else if (kind == "gottesman") {
        hqc::GottesmanCode g = hqc::gottesman(j, threads);
        emit("bit order", g.msb_convention ? "msb" : "lsb");
        h = hqc::make_hybrid(g.group.basis, {});
    } else if (kind == "seed") {
        h = hqc::seed_code(a);
    } else if (kind == "paste") {
        hqc::PastingLayout layout = hqc::pasting_layout(m, a);
        for (std::size_t b = 0; b < layout.block_sizes.size(); ++b)
            emit("block " + std::to_string(b),
                 "size " + std::to_string(layout.block_sizes[b]) + " at qubit " +
                     std::to_string(layout.block_offsets[b]) + ", rows from " +
                     std::to_string(layout.block_rows[b]));
        h = hqc::paste(m, a, threads);
    } else {
        throw std::invalid_argument("family: unknown kind '" + kind + "'");
    }

    hqc::DistanceResult dr = hqc::distance(*h, w_max, threads);
    std::optional<std::size_t> d =
        dr.exact() ? std::optional<std::size_t>(dr.found->weight) : std::nullopt;
    std::cout << hqc::format_declared(hqc::computed_params(*h, d));
    if (!dr.exact()) std::cout << " distance >= " << dr.value() << " (scan bound " << dr.scanned_to << ")";
    std::cout << "\n";

    if (!out.empty()) {
        std::string text = hqc::write_code_file(*h, d);
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write '" + out + "'");
        f << text;
        f.close();
        hqc::CodeFile cf = hqc::parse_code_file(out);
        hqc::HybridCode back = hqc::to_hybrid(cf);
        bool same = back.n == h->n && back.quantum.basis == h->quantum.basis &&
                    back.classical == h->classical;
        if (!same) throw std::logic_error("round-trip mismatch after writing " + out);
        emit("wrote", out + " (round-trip verified)");
    }
    return kExitOk;
}

int cmd_sweep(std::size_t n, std::size_t d, unsigned q, bool shadow, bool nested) {
    std::vector<hqc::SweepEntry> entries = hqc::sweep_stabilizer(n, d, q, shadow, nested);
    for (const auto& e : entries)
        std::cout << "k=" << e.k << " m=" << e.m << " "
                  << (e.feasible ? "feasible" : "infeasible") << "\n";
    for (std::size_t m = 0; m <= n; ++m) {
        bool any = false;
        std::size_t best = 0;
        for (const auto& e : entries)
            if (e.m == m && e.feasible) {
                any = true;
                best = std::max(best, e.k);
            }
        if (any) emit("max k at m=" + std::to_string(m), std::to_string(best));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid stabilizer code toolkit"};
    app.require_subcommand(1);
    int threads = 1;
    std::string format = "plain";
    app.add_option("--threads", threads, "thread count for scans")->capture_default_str();
    app.add_option("--format", format, "plain or kv")
        ->check(CLI::IsMember({"plain", "kv"}))
        ->capture_default_str();

    std::string path, out;
    std::size_t w_max = 4;
    bool dense = false;

    CLI::App* verify = app.add_subcommand("verify", "check a code file");
    verify->add_option("file", path, "code file")->required();
    verify->add_option("--w-max", w_max, "distance scan bound")->capture_default_str();
    verify->add_flag("--dense", dense, "cross-check with the dense oracle");

    CLI::App* enumerate = app.add_subcommand("enumerate", "weight distributions of a code file");
    enumerate->add_option("file", path, "code file")->required();
    enumerate->add_flag("--dense", dense, "use the dense oracle instead of group counting");

    unsigned long long lk = 0, lm = 0, lK = 0, lM = 0;
    std::size_t ln = 0, ld = 1;
    unsigned lq = 2;
    bool no_shadow = false, nested_on = false, nested_off = false;
    CLI::App* lp = app.add_subcommand("lp", "decide LP feasibility of parameters");
    lp->add_option("--n", ln, "length")->required();
    auto* optk = lp->add_option("--k", lk, "logical qubits");
    auto* optm = lp->add_option("--m", lm, "classical bits");
    auto* optK = lp->add_option("--K", lK, "inner dimension");
    auto* optM = lp->add_option("--M", lM, "inner code count");
    optk->excludes(optK);
    optm->excludes(optM);
    lp->add_option("--d", ld, "distance")->required();
    lp->add_option("--q", lq, "alphabet size")->capture_default_str();
    lp->add_flag("--no-shadow", no_shadow, "drop shadow rows");
    lp->add_flag("--nested", nested_on, "force nested rows on");
    lp->add_flag("--no-nested", nested_off, "force nested rows off");

    std::string kind;
    std::size_t fn = 5, fm = 1, fa = 7, fw = 0;
    unsigned fj = 3;
    CLI::App* family = app.add_subcommand("family", "construct a code family member");
    family->add_option("kind", kind, "dist2 | gottesman | seed | paste")->required();
    family->add_option("--n", fn, "length (dist2)");
    family->add_option("--j", fj, "exponent (gottesman)");
    family->add_option("--m", fm, "block count (paste)");
    family->add_option("--a", fa, "seed length (seed, paste)");
    family->add_option("--w-max", fw, "distance scan bound (0 = per-kind default)");
    family->add_option("--out", out, "write the code file here");

    std::size_t sn = 0, sd = 1;
    CLI::App* sweep = app.add_subcommand("sweep", "LP feasibility over all (k,m) splits");
    sweep->add_option("--n", sn, "length")->required();
    sweep->add_option("--d", sd, "distance")->required();
    sweep->add_option("--q", lq, "alphabet size");
    sweep->add_flag("--no-shadow", no_shadow, "drop shadow rows");
    sweep->add_flag("--no-nested", nested_off, "drop nested rows");

    try {
        app.parse(argc, argv);
        g_kv = format == "kv";
        if (verify->parsed()) return cmd_verify(path, w_max, dense, threads);
        if (enumerate->parsed()) return cmd_enumerate(path, dense);
        if (lp->parsed()) {
            bool stab_form = !optK->count() && !optM->count();
            hqc::LPInstance inst;
            inst.n = ln;
            inst.K = optK->count() ? mpz_class(static_cast<unsigned long>(lK))
                                   : mpz_class(1) << lk;
            inst.M = optM->count() ? mpz_class(static_cast<unsigned long>(lM))
                                   : mpz_class(1) << lm;
            inst.d = ld;
            inst.q = lq;
            inst.shadow = !no_shadow && lq == 2;
            inst.nested = nested_on || (stab_form && !nested_off);
            hqc::DeclaredParams shown;
            shown.n = ln;
            shown.stabilizer_form = stab_form;
            shown.k = lk;
            shown.m = lm;
            shown.K = stab_form ? (1ULL << lk) : lK;
            shown.M = stab_form ? (1ULL << lm) : (optM->count() ? lM : 1);
            shown.d = ld;
            return cmd_lp(inst, hqc::format_declared(shown));
        }
        if (family->parsed()) {
            if (fw == 0) fw = kind == "dist2" ? 2 : 3;
            return cmd_family(kind, fn, fj, fm, fa, fw, out, threads);
        }
        if (sweep->parsed()) return cmd_sweep(sn, sd, lq, !no_shadow && lq == 2, !nested_off);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const hqc::CodeFileParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
