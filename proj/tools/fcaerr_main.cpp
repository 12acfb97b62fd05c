// fcaerr — scale, factorize and evaluate binary data sets, and inspect where
// a scaling breaks the conceptual structure of the original context.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fcaerr/fcaerr.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fcaerr::ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
}

fcaerr::ObjectMap load_map(const std::string& map_path, const fcaerr::FormalContext& base,
                           const fcaerr::FormalContext& scale) {
    if (map_path.empty()) return fcaerr::ObjectMap::identity_by_name(base, scale);
    json j = json::parse(slurp(map_path));
    return fcaerr::object_map_from_json(j, base, scale);
}

struct Cli {
    std::size_t cap = fcaerr::kDefaultConceptCap;

    // scale
    std::string scale_in, scale_spec, scale_out;
    // factorize
    std::string fact_in, fact_out;
    fcaerr::BmfParams bmf;
    // evaluate
    std::string eval_context, eval_scale, eval_h, eval_map, eval_report = "table";
    bool ae_only = false;
    // lattice
    std::string lat_context, lat_dot, lat_base, lat_split, lat_labels = "reduced", lat_map;
};

int run_scale(const Cli& cli) {
    fcaerr::CsvTable table = fcaerr::parse_csv(slurp(cli.scale_in));
    fcaerr::ScalingSpec spec;
    if (!cli.scale_spec.empty()) spec = fcaerr::ScalingSpec::from_json(json::parse(slurp(cli.scale_spec)));
    fcaerr::FormalContext ctx = fcaerr::scale_csv(table, spec);
    fcaerr::write_cxt_file(ctx, cli.scale_out);
    std::cerr << "wrote " << cli.scale_out << ": " << ctx.object_count() << " objects, "
              << ctx.attribute_count() << " attributes\n";
    return 0;
}

int run_factorize(const Cli& cli) {
    fcaerr::FormalContext ctx = fcaerr::read_cxt_file(cli.fact_in);
    fcaerr::BinaryFactorization fac = fcaerr::bmf_factorize(ctx, cli.bmf);
    std::filesystem::path prefix(cli.fact_out);
    fcaerr::write_cxt_file(fac.scale, prefix.string() + ".S.cxt");
    fcaerr::write_cxt_file(fac.loading, prefix.string() + ".H.cxt");
    json meta;
    meta["params"] = {{"rank", fac.scale.attribute_count()},
                      {"max_iter", cli.bmf.max_iter},
                      {"restarts", cli.bmf.restarts},
                      {"lambda_w", cli.bmf.lambda_w},
                      {"lambda_h", cli.bmf.lambda_h},
                      {"seed", cli.bmf.seed},
                      {"threshold", cli.bmf.threshold},
                      {"tol", cli.bmf.tol}};
    meta["fit_error"] = fac.fit_error;
    meta["best_run"] = fac.best_run;
    meta["runs"] = json::array();
    for (const auto& r : fac.runs)
        meta["runs"].push_back({{"seed", r.seed},
                                {"frobenius", r.frobenius},
                                {"iterations", r.iterations},
                                {"monotonicity_violations", r.monotonicity_violations}});
    std::ofstream out(prefix.string() + ".meta.json");
    out << meta.dump(2) << "\n";
    std::cerr << "wrote " << prefix.string() << ".S.cxt / .H.cxt / .meta.json (Frob "
              << fac.fit_error << ")\n";
    return 0;
}

int run_evaluate(const Cli& cli) {
    fcaerr::FormalContext k = fcaerr::read_cxt_file(cli.eval_context);
    fcaerr::FormalContext s = fcaerr::read_cxt_file(cli.eval_scale);
    fcaerr::ObjectMap sigma = load_map(cli.eval_map, k, s);
    std::optional<fcaerr::FormalContext> approx;
    if (!cli.eval_h.empty()) {
        fcaerr::FormalContext h = fcaerr::read_cxt_file(cli.eval_h);
        approx = fcaerr::boolean_product(s, h);
    }
    fcaerr::ErrorReport rep = fcaerr::error_report(k, s, sigma, approx, cli.cap, cli.ae_only);
    if (cli.eval_report == "json")
        std::cout << fcaerr::to_json(rep).dump(2) << "\n";
    else
        std::cout << fcaerr::to_table(rep);
    return 0;  // analysis, not validation: CE > 0 is still a success
}

int run_lattice(const Cli& cli) {
    using fcaerr::LabelStyle;
    LabelStyle style = cli.lat_labels == "full" ? LabelStyle::Full : LabelStyle::Reduced;
    fcaerr::FormalContext ctx = fcaerr::read_cxt_file(cli.lat_context);

    if (cli.lat_base.empty()) {
        if (!cli.lat_split.empty())
            throw CLI::ValidationError("--split requires --highlight-errors BASE.cxt");
        fcaerr::ConceptLattice lat = fcaerr::concepts(ctx, cli.cap);
        emit(fcaerr::export_dot(lat, ctx, {}, style), cli.lat_dot);
        return 0;
    }

    fcaerr::FormalContext base = fcaerr::read_cxt_file(cli.lat_base);
    fcaerr::ObjectMap sigma = load_map(cli.lat_map, base, ctx);

    auto reds_against_base = [&](const fcaerr::ConceptLattice& lat) {
        std::vector<fcaerr::Bitset> red;
        for (const fcaerr::Concept& c : lat.concepts())
            if (!base.is_extent(c.extent)) red.push_back(c.extent);
        return red;
    };

    if (cli.lat_split.empty()) {
        // lattice of the reflected extents sigma^-1[Ext(ctx)], errors in red
        fcaerr::FormalContext reflected = fcaerr::sigma_context(base, ctx, sigma);
        fcaerr::ConceptLattice lat = fcaerr::concepts(reflected, cli.cap);
        emit(fcaerr::export_dot(lat, reflected, reds_against_base(lat), style), cli.lat_dot);
    } else if (cli.lat_split == "valid") {
        fcaerr::ScaleMeasure part = fcaerr::consistent_part_measure(base, ctx, sigma, cli.cap);
        fcaerr::ConceptLattice lat = fcaerr::concepts(part.scale, cli.cap);
        emit(fcaerr::export_dot(lat, part.scale, {}, style), cli.lat_dot);
    } else if (cli.lat_split == "complement") {
        fcaerr::ClosureSystem reflected = fcaerr::reflected_extents(base, ctx, sigma, cli.cap);
        fcaerr::ConceptualError err = fcaerr::conceptual_scaling_error(base, ctx, sigma, cli.cap);
        if (!err.ce_available) throw fcaerr::CapExceededError(cli.cap);
        fcaerr::ClosureSystem comp = fcaerr::join_complement(reflected, *err.consistent_part);
        // label each member with its conjunction of scale attributes
        fcaerr::FormalContext through = fcaerr::sigma_context(base, ctx, sigma);
        std::vector<fcaerr::Bitset> cols;
        std::vector<std::string> names;
        for (const fcaerr::Bitset& a : comp.members()) {
            fcaerr::AttributeSet intent = through.derive_objects(a);
            std::string label = "∧{";
            bool first = true;
            intent.for_each([&](std::size_t m) {
                if (!first) label += ",";
                label += through.attribute_name(m);
                first = false;
            });
            names.push_back(label + "}");
            cols.push_back(a);
        }
        fcaerr::ScaleMeasure comp_scale = fcaerr::detail::family_as_scale(base, cols, names);
        fcaerr::ConceptLattice lat = fcaerr::concepts(comp_scale.scale, cli.cap);
        emit(fcaerr::export_dot(lat, comp_scale.scale, reds_against_base(lat), style), cli.lat_dot);
    } else if (cli.lat_split == "attributes") {
        fcaerr::AttributeSplit split = fcaerr::attribute_split(base, ctx, sigma);
        fcaerr::ConceptLattice consistent = fcaerr::concepts(split.consistent.scale, cli.cap);
        fcaerr::ConceptLattice inconsistent = fcaerr::concepts(split.inconsistent, cli.cap);
        auto preimage_reds = [&](const fcaerr::ConceptLattice& lat) {
            std::vector<fcaerr::Bitset> red;
            for (const fcaerr::Concept& c : lat.concepts())
                if (!base.is_extent(sigma.preimage(c.extent))) red.push_back(c.extent);
            return red;
        };
        std::string out =
            fcaerr::export_dot(consistent, split.consistent.scale, preimage_reds(consistent), style,
                               "consistent_attributes");
        out += fcaerr::export_dot(inconsistent, split.inconsistent, preimage_reds(inconsistent), style,
                                  "inconsistent_attributes");
        emit(out, cli.lat_dot);
    } else {
        throw CLI::ValidationError("--split must be valid|complement|attributes");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    CLI::App app{"conceptual scaling error toolkit for binary data"};
    app.require_subcommand(1);
    app.add_option("--cap", cli.cap, "concept enumeration cap")
        ->envname("FCAERR_CAP")
        ->check(CLI::PositiveNumber);

    CLI::App* scale = app.add_subcommand("scale", "scale a CSV table into a formal context (.cxt)");
    scale->add_option("--in", cli.scale_in, "input CSV")->required();
    scale->add_option("--spec", cli.scale_spec,
                      "scaling spec JSON: column -> {kind: nominal|ordinal|interval|id, breaks: [...]}; "
                      "unlisted columns scale nominally");
    scale->add_option("--out", cli.scale_out, "output .cxt path")->required();

    CLI::App* fact = app.add_subcommand("factorize", "binary matrix factorization K ~ S*H");
    fact->add_option("--in", cli.fact_in, "input .cxt")->required();
    fact->add_option("--out", cli.fact_out, "output prefix (writes .S.cxt, .H.cxt, .meta.json)")
        ->required();
    fact->add_option("--k", cli.bmf.rank, "rank; default round(sqrt(|M|))");
    fact->add_option("--max-iter", cli.bmf.max_iter, "iteration limit per run");
    fact->add_option("--restarts", cli.bmf.restarts, "independent seeded runs");
    fact->add_option("--seed", cli.bmf.seed, "RNG seed");
    fact->add_option("--lambda-w", cli.bmf.lambda_w, "growth of the W binarization penalty");
    fact->add_option("--lambda-h", cli.bmf.lambda_h, "growth of the H binarization penalty");

    CLI::App* eval = app.add_subcommand(
        "evaluate", "report matrix and conceptual errors of a scaling against a context");
    eval->add_option("context", cli.eval_context, "base context .cxt")->required();
    eval->add_option("scale", cli.eval_scale, "scale context .cxt (or BMF S factor)")->required();
    eval->add_option("h", cli.eval_h, "optional BMF H factor .cxt; evaluates S*H as approximation");
    eval->add_option("--map", cli.eval_map, "object map JSON (default: identity by name)");
    eval->add_option("--report", cli.eval_report, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    eval->add_flag("--ae-only", cli.ae_only, "skip extent enumerations; attribute errors only");

    CLI::App* lat = app.add_subcommand("lattice", "concept lattice as DOT");
    lat->add_option("context", cli.lat_context, "context .cxt to draw")->required();
    lat->add_option("--dot", cli.lat_dot, "output path (default stdout)");
    lat->add_option("--highlight-errors", cli.lat_base,
                    "base context; extents not closed there turn red and the drawn lattice is the "
                    "reflected family");
    lat->add_option("--split", cli.lat_split,
                    "valid|complement|attributes: draw the consistent part, its join-complement, or "
                    "the attribute split instead")
        ->check(CLI::IsMember({"valid", "complement", "attributes"}));
    lat->add_option("--labels", cli.lat_labels, "reduced|full node labeling")
        ->check(CLI::IsMember({"reduced", "full"}));
    lat->add_option("--map", cli.lat_map, "object map JSON (default: identity by name)");

    try {
        app.parse(argc, argv);
        if (scale->parsed()) return run_scale(cli);
        if (fact->parsed()) return run_factorize(cli);
        if (eval->parsed()) return run_evaluate(cli);
        if (lat->parsed()) return run_lattice(cli);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const fcaerr::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
