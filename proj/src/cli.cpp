#include "mcdg/cli.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mcdg/catfile.hpp"
#include "mcdg/nerve.hpp"
#include "mcdg/sampling.hpp"
#include "mcdg/variety.hpp"

namespace mcdg {
namespace {

using json = nlohmann::ordered_json;

/// Options shared by every subcommand; the rest live in the handlers.
struct Common {
    std::string file;
    std::string field;
    std::string out_path;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("file", c.file, "category description (.cat)")->required();
    sub->add_option("--field", c.field, "reduce coefficients to Q or Fp before running");
    sub->add_option("--out", c.out_path, "write the output here instead of standard output");
}

DGCategory load_category(const Common& c) {
    DGCategory P = parse_category(read_file(c.file));
    if (!c.field.empty()) P = reduce_category(P, parse_field_name(c.field));
    return P;
}

int emit_payload(const Common& c, const std::string& payload, std::ostream& out,
                 std::ostream& err, int code) {
    if (c.out_path.empty()) {
        out << payload;
        return code;
    }
    try {
        write_file(c.out_path, payload);
    } catch (const error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

std::vector<Scalar> parse_scalar_list(const Field& k, const std::string& text) {
    std::vector<Scalar> out;
    std::string cur;
    auto flush = [&] {
        std::size_t b = cur.find_first_not_of(" \t");
        std::size_t e = cur.find_last_not_of(" \t");
        require(b != std::string::npos, "empty entry in a scalar list");
        out.push_back(k.parse(cur.substr(b, e - b + 1)));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else
            cur += ch;
    }
    if (!cur.empty() || !out.empty()) flush();
    return out;
}

json mat_json(const Field& k, const KMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(k.to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

int cap_or_default(int level, const DGCategory& P) {
    int N = level >= 0 ? level : P.bound + 2;
    require(N >= 0, "negative level cap");
    return N;
}

// ---- subcommand handlers; input phase already done by the caller ----

int cmd_check(const Common& c, const DGCategory& P, std::ostream& out, std::ostream& err) {
    try {
        validate_category(P);
    } catch (const error& e) {
        return emit_payload(c, std::string("axioms: FAIL\n") + e.what() + "\n", out, err, 1);
    }
    return emit_payload(c, "axioms: OK\n", out, err, 0);
}

int cmd_mc_verify(const Common& c, const DGCategory& P, int obj,
                  const std::vector<Scalar>& coeffs, std::ostream& out, std::ostream& err) {
    Element eta = zero_element(P, obj, obj, 1);
    eta.coeffs = coeffs;
    try {
        if (is_mc(P, eta)) return emit_payload(c, "MC: OK\n", out, err, 0);
        std::string witness = element_to_string(P, curvature(P, eta));
        return emit_payload(c, "MC: FAIL curvature = " + witness + "\n", out, err, 1);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_variety_emit(const Common& c, const DGCategory& P, int obj, std::ostream& out,
                     std::ostream& err) {
    try {
        return emit_payload(c, emit_ideal(curvature_ideal(P, obj)), out, err, 0);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_variety_count(const Common& c, const DGCategory& P, int obj, bool dual,
                      std::uint64_t guard, std::ostream& out, std::ostream& err) {
    try {
        CurvatureIdeal I = curvature_ideal(P, obj);
        Ring B = dual ? Ring::dual_numbers(P.ring.base()) : Ring::field(P.ring.base());
        std::size_t n = enumerate_points(I, B, static_cast<std::size_t>(guard)).size();
        return emit_payload(c, std::to_string(n) + " points\n", out, err, 0);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_lift(const Common& c, const DGCategory& P, int obj, const std::string& ring_name,
             std::uint64_t seed, std::ostream& out, std::ostream& err) {
    try {
        const Field& k = P.ring.base();
        Ring B = ring_name == "poly3" ? Ring::truncated_poly3(k) : Ring::dual_numbers(k);
        Rng rng(seed);
        GeneratedLift gen = random_lift_problem(rng, P, B, obj);
        LiftResult res = lift(gen.prob);
        return emit_payload(c, res.certificate, out, err, 0);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_dp_emit(const Common& c, const DGCategory& P, int src, int dst, int level,
                std::ostream& out, std::ostream& err) {
    try {
        int N = cap_or_default(level, P);
        const Field& k = P.ring.base();
        Element ea = zero_element(P, src, src, 1);
        Element eb = zero_element(P, dst, dst, 1);
        TruncatedComplex T = truncate_hom(P, ea, eb);
        SimplicialModule S = dold_puppe(T, N);

        json doc;
        doc["format"] = "dp-module";
        doc["field"] = k.name();
        doc["src"] = P.objects[static_cast<std::size_t>(src)];
        doc["dst"] = P.objects[static_cast<std::size_t>(dst)];
        doc["level"] = N;
        json complex;
        complex["dims"] = T.C.dims;
        complex["z0_inclusion"] = mat_json(k, T.z0_inclusion);
        json bnds = json::array();
        for (std::size_t j = 1; j < T.C.dims.size(); ++j)
            bnds.push_back(mat_json(k, T.C.bnd(static_cast<int>(j))));
        complex["boundary"] = std::move(bnds);
        doc["complex"] = std::move(complex);
        doc["ranks"] = S.ranks;
        json faces = json::array();
        for (int n = 1; n <= N; ++n) {
            json row = json::array();
            for (const KMatrix& m : S.face[static_cast<std::size_t>(n)])
                row.push_back(mat_json(k, m));
            faces.push_back(std::move(row));
        }
        doc["face"] = std::move(faces);
        json degens = json::array();
        for (int n = 0; n < N; ++n) {
            json row = json::array();
            for (const KMatrix& m : S.degen[static_cast<std::size_t>(n)])
                row.push_back(mat_json(k, m));
            degens.push_back(std::move(row));
        }
        doc["degen"] = std::move(degens);
        return emit_payload(c, doc.dump(2) + "\n", out, err, 0);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_nerve_emit(const Common& c, const DGCategory& P, int level, std::ostream& out,
                   std::ostream& err) {
    try {
        int N = cap_or_default(level, P);
        const Field& k = P.ring.base();
        DPHoms H = dp_homs(P, N);
        NerveSlice S = nerve_slice(H);

        json doc;
        doc["format"] = "nerve";
        doc["field"] = k.name();
        doc["objects"] = P.objects;
        doc["cap"] = N;
        json levels = json::array();
        for (int n = 0; n <= N; ++n) {
            for (int m = 0; m <= N; ++m) {
                const NerveLevel& L = S.level(n, m);
                json lv;
                lv["n"] = n;
                lv["m"] = m;
                json tup = json::array();
                for (const NerveTuple& t : L.tuples)
                    tup.push_back(json{{"objects", t.objects}, {"factor_rank", t.factor_rank}});
                lv["tuples"] = std::move(tup);
                if (k.is_finite()) lv["cardinality"] = level_cardinality(k, L).str();
                levels.push_back(std::move(lv));
            }
        }
        doc["levels"] = std::move(levels);
        return emit_payload(c, doc.dump(2) + "\n", out, err, 0);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

std::string coeff_list(const Ring& R, const std::vector<Scalar>& coeffs) {
    const Field& k = R.base();
    std::size_t w = R.width();
    std::string s = "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += w > 1 && i % w == 0 ? " ; " : ", ";
        s += k.to_string(coeffs[i]);
    }
    return s + ")";
}

int cmd_prestack(const Common& c, const DGCategory& P, int level, bool dual,
                 std::uint64_t guard, std::ostream& out, std::ostream& err) {
    try {
        int N = cap_or_default(level, P);
        Ring R = dual ? Ring::dual_numbers(P.ring.base()) : Ring::field(P.ring.base());
        PrestackValue V =
            mc_prestack_value(P, R, N, nullptr, static_cast<std::size_t>(guard));

        std::ostringstream s;
        s << "prestack value\n";
        s << "ring: " << R.name() << "\n";
        s << "cap: " << N << "\n";
        s << "mc-points: " << V.points.size() << "\n";
        for (std::size_t i = 0; i < V.points.size(); ++i) {
            const MCObject& pt = V.points[i];
            s << "  [" << i << "] " << P.objects[static_cast<std::size_t>(pt.object)]
              << ": eta = " << coeff_list(R, pt.eta.coeffs) << "\n";
        }
        if (V.counted) {
            s << "interior:\n";
            for (const InteriorLevel& L : V.interior)
                s << "  level " << L.n << ": total " << L.total.str() << " (tuples "
                  << L.tuples.size() << ")\n";
        } else {
            s << "interior: counts unavailable over " << R.name()
              << " (infinite coefficients)\n";
        }
        return emit_payload(c, s.str(), out, err, 0);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for dg-categories, Maurer-Cartan loci, and their nerves"};
    app.name("mcdg");
    app.require_subcommand(1);

    int rc = 0;

    auto* c_check = app.add_subcommand("check", "validate the dg-category axioms");
    Common o_check;
    add_common(c_check, o_check);

    auto* c_mc = app.add_subcommand("mc-verify", "check a degree-1 endomorphism for Maurer-Cartan");
    Common o_mc;
    std::string mc_object, mc_eta;
    add_common(c_mc, o_mc);
    c_mc->add_option("--object", mc_object, "object label")->required();
    c_mc->add_option("--eta", mc_eta, "comma-separated coefficients in the degree-1 basis")
        ->required();

    auto* c_vemit = app.add_subcommand("variety-emit", "emit the curvature ideal generators");
    Common o_vemit;
    std::string vemit_object;
    add_common(c_vemit, o_vemit);
    c_vemit->add_option("--object", vemit_object, "object label")->required();

    auto* c_vcount = app.add_subcommand("variety-count", "count Maurer-Cartan points");
    Common o_vcount;
    std::string vcount_object;
    bool vcount_dual = false;
    std::uint64_t vcount_guard = 2'000'000;
    add_common(c_vcount, o_vcount);
    c_vcount->add_option("--object", vcount_object, "object label")->required();
    c_vcount->add_flag("--dual-numbers", vcount_dual, "count over k[t]/(t^2) instead of k");
    c_vcount->add_option("--guard", vcount_guard, "largest search space to enumerate");

    auto* c_lift = app.add_subcommand("lift", "generate and solve a square-zero lifting problem");
    Common o_lift;
    std::string lift_object, lift_ring = "dual";
    std::uint64_t lift_seed = 0;
    add_common(c_lift, o_lift);
    c_lift->add_option("--object", lift_object, "object label (default: first object)");
    c_lift->add_option("--ring", lift_ring, "coefficient ring: dual (k[t]/(t^2)) or poly3 (k[x]/(x^3))")
        ->check(CLI::IsMember({"dual", "poly3"}));
    c_lift->add_option("--seed", lift_seed, "generator seed");

    auto* c_dp = app.add_subcommand("dp-emit", "emit the realized hom simplicial module");
    Common o_dp;
    std::string dp_src, dp_dst;
    int dp_level = -1;
    add_common(c_dp, o_dp);
    c_dp->add_option("--src", dp_src, "source object label")->required();
    c_dp->add_option("--dst", dp_dst, "target object label")->required();
    c_dp->add_option("--level", dp_level, "simplicial level cap (default: bound + 2)");

    auto* c_nerve = app.add_subcommand("nerve-emit", "emit the structural nerve levels");
    Common o_nerve;
    int nerve_level = -1;
    add_common(c_nerve, o_nerve);
    c_nerve->add_option("--level", nerve_level, "level cap (default: bound + 2)");

    auto* c_pre = app.add_subcommand("prestack", "Maurer-Cartan points and interior levels");
    Common o_pre;
    int pre_level = -1;
    bool pre_dual = false;
    std::uint64_t pre_guard = 2'000'000;
    add_common(c_pre, o_pre);
    c_pre->add_option("--level", pre_level, "level cap (default: bound + 2)");
    c_pre->add_flag("--dual-numbers", pre_dual, "coefficients in k[t]/(t^2) instead of k");
    c_pre->add_option("--guard", pre_guard, "largest search space to enumerate");

    c_check->callback([&] {
        DGCategory P;
        try {
            P = load_category(o_check);
        } catch (const error& e) {
            err << "input error: " << e.what() << "\n";
            rc = 2;
            return;
        }
        rc = cmd_check(o_check, P, out, err);
    });

    c_mc->callback([&] {
        DGCategory P;
        int obj = 0;
        std::vector<Scalar> coeffs;
        try {
            P = load_category(o_mc);
            obj = P.index_of(mc_object);
            coeffs = parse_scalar_list(P.ring.base(), mc_eta);
            std::size_t want = static_cast<std::size_t>(P.dim(obj, obj, 1)) * P.ring.width();
            require(coeffs.size() == want,
                    "--eta needs " + std::to_string(want) + " coefficients, got " +
                        std::to_string(coeffs.size()));
        } catch (const error& e) {
            err << "input error: " << e.what() << "\n";
            rc = 2;
            return;
        }
        rc = cmd_mc_verify(o_mc, P, obj, coeffs, out, err);
    });

    c_vemit->callback([&] {
        DGCategory P;
        int obj = 0;
        try {
            P = load_category(o_vemit);
            obj = P.index_of(vemit_object);
        } catch (const error& e) {
            err << "input error: " << e.what() << "\n";
            rc = 2;
            return;
        }
        rc = cmd_variety_emit(o_vemit, P, obj, out, err);
    });

    c_vcount->callback([&] {
        DGCategory P;
        int obj = 0;
        try {
            P = load_category(o_vcount);
            obj = P.index_of(vcount_object);
            require(P.ring.base().is_finite(),
                    "point counting needs a finite field; pass --field Fp");
        } catch (const error& e) {
            err << "input error: " << e.what() << "\n";
            rc = 2;
            return;
        }
        rc = cmd_variety_count(o_vcount, P, obj, vcount_dual, vcount_guard, out, err);
    });

    c_lift->callback([&] {
        DGCategory P;
        int obj = 0;
        try {
            P = load_category(o_lift);
            obj = lift_object.empty() ? 0 : P.index_of(lift_object);
        } catch (const error& e) {
            err << "input error: " << e.what() << "\n";
            rc = 2;
            return;
        }
        rc = cmd_lift(o_lift, P, obj, lift_ring, lift_seed, out, err);
    });

    c_dp->callback([&] {
        DGCategory P;
        int src = 0, dst = 0;
        try {
            P = load_category(o_dp);
            src = P.index_of(dp_src);
            dst = P.index_of(dp_dst);
        } catch (const error& e) {
            err << "input error: " << e.what() << "\n";
            rc = 2;
            return;
        }
        rc = cmd_dp_emit(o_dp, P, src, dst, dp_level, out, err);
    });

    c_nerve->callback([&] {
        DGCategory P;
        try {
            P = load_category(o_nerve);
        } catch (const error& e) {
            err << "input error: " << e.what() << "\n";
            rc = 2;
            return;
        }
        rc = cmd_nerve_emit(o_nerve, P, nerve_level, out, err);
    });

    c_pre->callback([&] {
        DGCategory P;
        try {
            P = load_category(o_pre);
            require(P.ring.base().is_finite(),
                    "prestack enumeration needs finite coefficients; pass --field Fp "
                    "(optionally with --dual-numbers)");
        } catch (const error& e) {
            err << "input error: " << e.what() << "\n";
            rc = 2;
            return;
        }
        rc = cmd_prestack(o_pre, P, pre_level, pre_dual, pre_guard, out, err);
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    return rc;
}

} // namespace mcdg
