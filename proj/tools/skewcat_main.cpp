#include "skewcat/corpus.hpp"
#include "skewcat/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

using namespace skewcat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

/* Input paths resolve against the working directory first, then against
 * $SKEWCAT_FIXTURES. */
std::string resolve_input(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (fs::path(path).is_relative()) {
        if (const char* dir = std::getenv("SKEWCAT_FIXTURES")) {
            fs::path candidate = fs::path(dir) / path;
            if (fs::exists(candidate)) return candidate.string();
        }
    }
    return path;
}

struct RunReport {
    std::string command;
    Report violations;
    Json outputs = Json::object();
    bool use_json = false;

    int finish() const {
        if (use_json) {
            Json j;
            j["command"] = command;
            j["status"] = violations.ok() ? "ok" : "violations";
            Json v = Json::array();
            for (const auto& viol : violations.violations)
                v.push_back(Json{{"axiom", viol.axiom}, {"witness", viol.witness}});
            j["violations"] = std::move(v);
            j["outputs"] = outputs;
            std::cout << j.dump(2) << "\n";
        } else if (violations.ok()) {
            std::cout << command << ": ok\n";
        } else {
            std::cout << command << ": " << violations.summary() << "\n";
        }
        return violations.ok() ? kExitOk : kExitViolation;
    }
};

void print_dims_table(const GradedDims& dims, int lo, int hi) {
    std::cout << "degree  dim\n";
    for (int d = lo; d <= hi; ++d) std::cout << d << "\t" << dim_at(dims, d) << "\n";
}

int cmd_validate(const std::string& path, bool use_json) {
    Json j = load_json_file(resolve_input(path));
    std::string kind = json_kind(j);
    RunReport rep;
    rep.command = "validate";
    rep.use_json = use_json;
    rep.outputs["kind"] = kind;
    if (kind == "complex") {
        rep.violations = validate_complex(complex_from_json(j));
    } else if (kind == "dgcat") {
        rep.violations = validate_dg_category(dgcat_from_json(j));
    } else if (kind == "action") {
        rep.violations = validate_action(action_from_json(j));
    } else if (kind == "module") {
        rep.violations = validate_module(module_from_json(j));
    } else if (kind == "equivariant") {
        auto rho = embedded_action(j);
        if (!rho) throw ParseError("standalone equivariant file needs an embedded action");
        rep.violations.absorb(validate_action(*rho), "action.");
        if (rep.violations.ok())
            rep.violations = validate_equivariant(equivariant_from_json(j, *rho), *rho);
    } else {
        throw ParseError("unknown kind '" + kind + "'");
    }
    return rep.finish();
}

int cmd_skew(const std::string& path, bool do_reduce, bool do_algebra, bool check_equiv,
             bool check_trivial, const std::string& out_dir, bool use_json) {
    StrictAction rho = action_from_json(load_json_file(resolve_input(path)));
    RunReport rep;
    rep.command = "skew";
    rep.use_json = use_json;

    SkewResult s = skew_group_dg_category(rho);
    rep.violations.absorb(validate_dg_category(s.category), "skew.");
    Json skew_json = dgcat_to_json(s.category);

    Json reduced_json, algebra_json;
    if (do_reduce) {
        ReduceResult red = reduce(rho, s);
        rep.violations.absorb(validate_dg_category(red.category), "reduced.");
        reduced_json = dgcat_to_json(red.category);
    }
    if (do_algebra) {
        Algebra ag = skew_group_algebra(rho);
        rep.violations.absorb(ag.validate(), "algebra.");
        algebra_json = dgcat_to_json(ag.as_category());
    }
    if (check_equiv) rep.violations.absorb(equivariance_of_embedding(s, rho), "equivariance.");
    if (check_trivial)
        rep.violations.absorb(check_trivial_induced_action(rho), "trivial_induced.");

    if (!out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(out_dir);
        write_json_file((fs::path(out_dir) / "skew.json").string(), skew_json);
        rep.outputs["skew"] = (fs::path(out_dir) / "skew.json").string();
        if (do_reduce) {
            write_json_file((fs::path(out_dir) / "reduced.json").string(), reduced_json);
            rep.outputs["reduced"] = (fs::path(out_dir) / "reduced.json").string();
        }
        if (do_algebra) {
            write_json_file((fs::path(out_dir) / "algebra.json").string(), algebra_json);
            rep.outputs["algebra"] = (fs::path(out_dir) / "algebra.json").string();
        }
    } else if (use_json) {
        rep.outputs["skew"] = skew_json;
        if (do_reduce) rep.outputs["reduced"] = reduced_json;
        if (do_algebra) rep.outputs["algebra"] = algebra_json;
    } else {
        std::cout << "skew category: " << s.category.object_count() << " object(s)\n";
        for (std::size_t x = 0; x < s.category.object_count(); ++x)
            for (std::size_t y = 0; y < s.category.object_count(); ++y) {
                GradedDims dims =
                    s.category.hom_dims(static_cast<int>(x), static_cast<int>(y));
                if (dims.empty()) continue;
                std::cout << "  hom(" << s.category.object_name(static_cast<int>(x)) << ", "
                          << s.category.object_name(static_cast<int>(y)) << "):";
                for (const auto& [d, n] : dims) std::cout << " " << d << ":" << n;
                std::cout << "\n";
            }
    }
    return rep.finish();
}

int cmd_freeify(const std::string& path, const std::string& out_dir, bool use_json) {
    StrictAction rho = action_from_json(load_json_file(resolve_input(path)));
    RunReport rep;
    rep.command = "freeify";
    rep.use_json = use_json;

    FreeifyResult fr = freeify(rho);
    rep.violations.absorb(validate_action(fr.action), "freeified.");
    Freeness free = is_free_on_objects(fr.action);
    if (!free.free) rep.violations.add("freeness", "freeified action is not free");
    rep.violations.absorb(
        validate_dg_functor(fr.projection, fr.action.category, rho.category), "projection.");
    for (std::size_t h = 0; h < rho.monoid.size(); ++h)
        if (compose_functors(fr.action.functor(static_cast<int>(h)), fr.projection) !=
            compose_functors(fr.projection, rho.functor(static_cast<int>(h))))
            rep.violations.add("projection_equivariance",
                               rho.monoid.element_name(static_cast<int>(h)));

    Json action_json = action_to_json(fr.action);
    Json pi_json = functor_to_json(fr.projection, fr.action.category, rho.category);
    if (!out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(out_dir);
        write_json_file((fs::path(out_dir) / "freeified.json").string(), action_json);
        write_json_file((fs::path(out_dir) / "projection.json").string(), pi_json);
        rep.outputs["freeified"] = (fs::path(out_dir) / "freeified.json").string();
        rep.outputs["projection"] = (fs::path(out_dir) / "projection.json").string();
    } else if (use_json) {
        rep.outputs["freeified"] = action_json;
        rep.outputs["projection"] = pi_json;
    } else {
        std::cout << "freeified action on " << fr.action.category.object_count()
                  << " object(s)\n";
    }
    return rep.finish();
}

int cmd_equiv(const std::string& action_path, const std::string& module_path, bool roundtrip,
              const std::string& homdim_other, bool use_json) {
    StrictAction rho = action_from_json(load_json_file(resolve_input(action_path)));
    Json mj = load_json_file(resolve_input(module_path));
    std::string kind = json_kind(mj);
    RunReport rep;
    rep.command = "equiv";
    rep.use_json = use_json;

    Algebra ag = skew_group_algebra(rho);

    auto load_other = [&](const std::string& p) {
        Json oj = load_json_file(resolve_input(p));
        if (json_kind(oj) != kind)
            throw ParseError("--homdim operand must have the same kind as the module");
        return oj;
    };

    if (kind == "module") {
        RightModule n = module_from_json(mj, ag);
        rep.violations.absorb(validate_module(n), "module.");
        if (roundtrip && rep.violations.ok())
            rep.violations.absorb(roundtrip_check_module(n, rho), "roundtrip.");
        if (!homdim_other.empty() && rep.violations.ok()) {
            RightModule other = module_from_json(load_other(homdim_other), ag);
            EquivariantModule e1 = from_skew_module(n, rho);
            EquivariantModule e2 = from_skew_module(other, rho);
            std::size_t skew_dim = hom_dim(n, other);
            std::size_t equiv_dim = hom_dim(e1, e2);
            rep.outputs["hom_dim_skew"] = skew_dim;
            rep.outputs["hom_dim_equivariant"] = equiv_dim;
            if (!use_json)
                std::cout << "hom_dim over the skew algebra: " << skew_dim
                          << "\nhom_dim equivariant: " << equiv_dim << "\n";
            if (skew_dim != equiv_dim)
                rep.violations.add("hom_dim_preservation",
                                   std::to_string(skew_dim) + " vs " +
                                       std::to_string(equiv_dim));
        }
    } else if (kind == "equivariant") {
        EquivariantModule e = equivariant_from_json(mj, rho);
        rep.violations.absorb(validate_equivariant(e, rho), "equivariant.");
        if (roundtrip && rep.violations.ok())
            rep.violations.absorb(roundtrip_check_equivariant(e, rho), "roundtrip.");
        if (!homdim_other.empty() && rep.violations.ok()) {
            EquivariantModule other = equivariant_from_json(load_other(homdim_other), rho);
            std::size_t equiv_dim = hom_dim(e, other);
            std::size_t skew_dim = hom_dim(to_skew_module(e, rho), to_skew_module(other, rho));
            rep.outputs["hom_dim_skew"] = skew_dim;
            rep.outputs["hom_dim_equivariant"] = equiv_dim;
            if (!use_json)
                std::cout << "hom_dim equivariant: " << equiv_dim
                          << "\nhom_dim over the skew algebra: " << skew_dim << "\n";
            if (skew_dim != equiv_dim)
                rep.violations.add("hom_dim_preservation",
                                   std::to_string(equiv_dim) + " vs " +
                                       std::to_string(skew_dim));
        }
    } else {
        throw ParseError("equiv expects a module or equivariant file, got '" + kind + "'");
    }
    return rep.finish();
}

int cmd_orbit(const std::string& source_path, const std::string& target_path, int period,
              std::vector<int> window, bool laurent_check, bool use_json) {
    if (period == 0) throw ParseError("--period must be nonzero");
    OrbitHomQuery q;
    q.source = complex_from_json(load_json_file(resolve_input(source_path)));
    q.target = complex_from_json(load_json_file(resolve_input(target_path)));
    q.period = period;
    q.window_lo = window.at(0);
    q.window_hi = window.at(1);

    RunReport rep;
    rep.command = "orbit";
    rep.use_json = use_json;
    GradedDims dims = orbit_hom_dims(q);
    rep.outputs["dims"] = graded_dims_to_json(dims);
    if (!use_json && q.window_lo <= q.window_hi)
        print_dims_table(dims, q.window_lo, q.window_hi);
    if (laurent_check) {
        GradedDims expect = laurent_dims(period, q.window_lo, q.window_hi);
        if (dims != expect) {
            std::string got;
            for (const auto& [d, n] : dims)
                got += std::to_string(d) + ":" + std::to_string(n) + " ";
            rep.violations.add("laurent_pattern", got.empty() ? "(empty)" : got);
        }
    }
    return rep.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact skew group algebra / dg-category construction toolkit"};
    app.require_subcommand(1);
    bool use_json = false;
    app.add_flag("--json", use_json, "emit a machine-readable report");
    app.fallthrough();  // let --json appear after the subcommand too

    auto* validate = app.add_subcommand("validate", "validate a JSON input by its kind");
    std::string validate_path;
    validate->add_option("path", validate_path, "input file")->required();

    auto* skew = app.add_subcommand("skew", "build the skew group dg-category of an action");
    std::string skew_path, skew_out;
    bool skew_reduce = false, skew_algebra = false, skew_equiv = false, skew_trivial = false;
    skew->add_option("action", skew_path, "action file")->required();
    skew->add_flag("--reduce", skew_reduce, "also build the reduced skew category");
    skew->add_flag("--algebra", skew_algebra, "also build the skew group algebra");
    skew->add_flag("--check-equivariance", skew_equiv, "check that the embedding is equivariant");
    skew->add_flag("--check-trivial-induced", skew_trivial,
                   "check the induced action on the reduced category is trivial (free actions)");
    skew->add_option("-o,--out", skew_out, "output directory");

    auto* freeify_cmd = app.add_subcommand("freeify", "make an action free on objects");
    std::string freeify_path, freeify_out;
    freeify_cmd->add_option("action", freeify_path, "action file")->required();
    freeify_cmd->add_option("-o,--out", freeify_out, "output directory");

    auto* equiv = app.add_subcommand("equiv", "equivariant-module checks over an action");
    std::string equiv_action, equiv_module, equiv_homdim;
    bool equiv_roundtrip = false;
    equiv->add_option("action", equiv_action, "action file")->required();
    equiv->add_option("module", equiv_module, "module or equivariant file")->required();
    equiv->add_flag("--roundtrip", equiv_roundtrip, "run the round-trip check");
    equiv->add_option("--homdim", equiv_homdim, "second module: compare hom dimensions");

    auto* orbit = app.add_subcommand("orbit", "orbit-category hom dimensions");
    std::string orbit_src, orbit_tgt;
    int orbit_period = 1;
    std::vector<int> orbit_window;
    bool orbit_laurent = false;
    orbit->add_option("source", orbit_src, "source complex file")->required();
    orbit->add_option("target", orbit_tgt, "target complex file")->required();
    orbit->add_option("--period", orbit_period, "shift period n (nonzero)")->required();
    orbit->add_option("--window", orbit_window, "inclusive degree window: lo hi")
        ->expected(2)
        ->required();
    orbit->add_flag("--laurent-check", orbit_laurent,
                    "compare against the Laurent pattern of the period");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(validate_path, use_json);
        if (*skew)
            return cmd_skew(skew_path, skew_reduce, skew_algebra, skew_equiv, skew_trivial,
                            skew_out, use_json);
        if (*freeify_cmd) return cmd_freeify(freeify_path, freeify_out, use_json);
        if (*equiv)
            return cmd_equiv(equiv_action, equiv_module, equiv_roundtrip, equiv_homdim,
                             use_json);
        if (*orbit)
            return cmd_orbit(orbit_src, orbit_tgt, orbit_period, orbit_window, orbit_laurent,
                             use_json);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
