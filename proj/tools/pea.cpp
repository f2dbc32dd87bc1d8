#include <pea/decompositions.hpp>
#include <pea/jordan.hpp>
#include <pea/riesz.hpp>
#include <pea/text_format.hpp>
#include <pea/zoo.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace pea;
using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
};

std::string labels_of(const PseudoEffectAlgebra& e, std::span<const Element> xs, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + e.label(xs[i]);
    return out;
}

Json label_array(const PseudoEffectAlgebra& e, std::span<const Element> xs) {
    Json out = Json::array();
    for (Element x : xs) out.push_back(e.label(x));
    return out;
}

Json rational_array(std::span<const Rational> xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

Json report_header(const Options& opt, const std::string& command, const PseudoEffectAlgebra* e) {
    Json r;
    r["command"] = command;
    r["version"] = std::string("pea ") + kVersion;
    r["seed"] = std::to_string(opt.seed);
    if (e) r["algebra"] = e->hash();
    return r;
}

PseudoEffectAlgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

Measure load_measure(const PseudoEffectAlgebra& e, const std::string& path) {
    return Measure(parse_measure(e, read_file(path)));
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") std::cout << text;
    else write_file(path, text);
}

int cmd_check(const Options& opt, const std::string& path) {
    PseudoEffectAlgebra e = [&] {
        try {
            return load_algebra(path);
        } catch (const ValidationError& v) {
            Json r = report_header(opt, "check", nullptr);
            r["input"] = path;
            r["axioms"] = "violated";
            Json list = Json::array();
            for (const auto& inst : v.report().violations) {
                Json w = Json::array();
                for (Element x : inst.elements) w.push_back(v.labels().at(x));
                list.push_back({{"axiom", axiom_name(inst.axiom)}, {"elements", w}, {"detail", inst.detail}});
            }
            r["violations"] = list;
            r["truncated"] = v.report().truncated;
            if (opt.format == "json") {
                std::cout << r.dump(2) << "\n";
            } else {
                std::cout << "axioms: violated (" << list.size() << (v.report().truncated ? "+" : "")
                          << " instances)\n";
                for (const auto& inst : v.report().violations) {
                    std::cout << "  " << axiom_name(inst.axiom) << ":";
                    for (Element x : inst.elements) std::cout << " " << v.labels().at(x);
                    if (!inst.detail.empty()) std::cout << " (" << inst.detail << ")";
                    std::cout << "\n";
                }
            }
            throw;
        }
    }();
    const auto profile = rdp_profile(e);
    const auto polytope = state_space(e);

    Json r = report_header(opt, "check", &e);
    r["input"] = path;
    r["elements"] = e.size();
    r["axioms"] = "ok";
    Json props = Json::array();
    for (const auto& v : profile)
        props.push_back({{"property", property_name(v.property)},
                         {"holds", v.holds},
                         {"witness", label_array(e, v.witness)},
                         {"instances", v.instances}});
    r["properties"] = props;
    r["states"] = {{"extreme", polytope.extreme_states.size()},
                   {"dimension", polytope.affine_dim},
                   {"simplex", is_simplex(polytope)}};

    if (opt.format == "json") {
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    std::cout << "algebra: " << e.hash() << "\n"
              << "elements: " << e.size() << "\n"
              << "axioms: ok\n";
    for (const auto& v : profile) {
        std::cout << property_name(v.property) << ": " << (v.holds ? "yes" : "no");
        if (!v.holds) {
            std::cout << " (witness ";
            if (v.property == Property::Rdp0) {
                std::cout << e.label(v.witness[0]) << "; " << e.label(v.witness[1]) << ", " << e.label(v.witness[2]);
            } else {
                std::cout << labels_of(e, v.witness);
            }
            std::cout << ")";
        }
        std::cout << "\n";
    }
    std::cout << "states: " << polytope.extreme_states.size() << " extreme, dimension " << polytope.affine_dim
              << "\n"
              << "simplex: " << (is_simplex(polytope) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_zoo(const std::string& expression, const std::string& out) {
    emit(export_algebra(zoo(expression)), out);
    return 0;
}

int cmd_states(const Options& opt, const std::string& path) {
    const auto e = load_algebra(path);
    const auto polytope = state_space(e);
    if (opt.format == "json") {
        Json r = report_header(opt, "states", &e);
        r["input"] = path;
        r["labels"] = e.labels();
        Json states = Json::array();
        for (const auto& s : polytope.extreme_states) states.push_back(rational_array(s.values()));
        r["states"] = states;
        r["dimension"] = polytope.affine_dim;
        r["simplex"] = is_simplex(polytope);
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    for (const auto& s : polytope.extreme_states) std::cout << join_values(s.values()) << "\n";
    return 0;
}

int cmd_lattice(const std::string& command, const std::string& path, const std::vector<std::string>& inputs,
                const std::string& out) {
    const auto e = load_algebra(path);
    std::vector<SignedMeasure> ms;
    for (const auto& p : inputs) ms.push_back(parse_measure(e, read_file(p)));
    const auto result = command == "join" ? lattice_join(e, ms) : lattice_meet(e, ms);
    emit(export_measure(e, result.value), out);
    return 0;
}

int cmd_jordan(const Options& opt, const std::string& path, const std::string& input, const std::string& prefix) {
    const auto e = load_algebra(path);
    const auto j = jordan_decompose(e, parse_measure(e, read_file(input)));
    write_file(prefix + ".plus.pm", export_measure(e, j.positive));
    write_file(prefix + ".minus.pm", export_measure(e, j.negative));
    Json r = report_header(opt, "jordan", &e);
    r["input"] = input;
    r["positive"] = prefix + ".plus.pm";
    r["negative"] = prefix + ".minus.pm";
    if (opt.format == "json") std::cout << r.dump(2) << "\n";
    else std::cout << "positive: " << prefix << ".plus.pm\nnegative: " << prefix << ".minus.pm\n";
    return 0;
}

int cmd_sample(const Options& opt, const std::string& path, unsigned scale, const std::string& out) {
    const auto e = load_algebra(path);
    emit(export_measure(e, sample_measure(e, state_space(e), opt.seed, scale)), out);
    return 0;
}

int cmd_center(const Options& opt, const std::string& path) {
    const auto e = load_algebra(path);
    const auto c = center(e);
    const auto m = members(c.members);
    if (opt.format == "json") {
        Json r = report_header(opt, "center", &e);
        r["central"] = label_array(e, m);
        r["boolean_subalgebra"] = c.boolean_algebra_check;
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "central: " << labels_of(e, m) << "\n"
                  << "boolean subalgebra: " << (c.boolean_algebra_check ? "yes" : "no") << "\n";
    }
    return 0;
}

struct DecomposeArgs {
    std::string algebra;
    std::string measure;
    std::string prefix;
    std::optional<std::string> face;
    std::optional<std::string> lebesgue;
    std::optional<std::string> eps_lebesgue;
    std::optional<std::string> central;
    std::optional<std::string> yosida_hewitt;
};

std::vector<Element> parse_label_list(const PseudoEffectAlgebra& e, const std::string& list) {
    std::vector<Element> out;
    std::stringstream in(list);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(e.at(item));
    return out;
}

Json verdict_json(const PseudoEffectAlgebra& e, const ContinuityVerdict& v) {
    Json out{{"relation", continuity_name(v.relation)}, {"holds", v.holds}};
    out["witness"] = v.witness ? Json(e.label(*v.witness)) : Json(nullptr);
    if (v.relation == Continuity::Epsilon) {
        Json rows = Json::array();
        for (const auto& row : v.eps_delta)
            rows.push_back({{"epsilon", to_string(row.epsilon)}, {"delta", to_string(row.delta)}});
        out["eps_delta"] = rows;
    }
    return out;
}

Json engine_json(const StatePolytope& p, const Face& face, const FaceCertificate& c) {
    Json vertices = Json::array();
    for (auto v : face.vertices) vertices.push_back(v);
    return {{"face_vertices", vertices},
            {"extreme_states", p.extreme_states.size()},
            {"lp_optimum", to_string(c.lp_optimum)},
            {"singularity_optimum", to_string(c.singularity_optimum)},
            {"coefficients", rational_array(c.coefficients)},
            {"pivots", c.pivots},
            {"uniqueness", c.uniqueness}};
}

Json trace_json(const PseudoEffectAlgebra& e, const AdditivityTrace& t) {
    return {{"holds", t.holds},
            {"reduction", t.reduction},
            {"families", t.families},
            {"witness", t.witness ? Json(e.label(*t.witness)) : Json(nullptr)}};
}

void print_text(const Json& j, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            std::cout << indent << key << ":\n";
            print_text(value, indent + "  ");
        } else if (value.is_array()) {
            std::cout << indent << key << ":";
            if (value.empty() || !value.front().is_structured()) {
                for (const auto& x : value) std::cout << " " << (x.is_string() ? x.get<std::string>() : x.dump());
                std::cout << "\n";
            } else {
                std::cout << "\n";
                for (const auto& x : value) {
                    std::cout << indent << "  -\n";
                    print_text(x, indent + "    ");
                }
            }
        } else {
            std::cout << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << "\n";
        }
    }
}

int cmd_decompose(const Options& opt, const DecomposeArgs& a) {
    const auto e = load_algebra(a.algebra);
    const auto m = load_measure(e, a.measure);
    const std::string prefix = a.prefix.empty() ? a.measure.substr(0, a.measure.rfind('.')) : a.prefix;
    Json r = report_header(opt, "decompose", &e);
    r["input"] = a.measure;

    std::optional<Measure> m1;
    std::optional<Measure> m2;
    if (a.central) {
        const auto t = load_measure(e, *a.central);
        auto d = central_lebesgue_decompose(e, m, t);
        r["mode"] = "central";
        r["reference"] = *a.central;
        r["a0"] = e.label(d.a0);
        r["null_central"] = label_array(e, d.null_central);
        r["a0_maximal"] = d.a0_maximal;
        r["modular_on_center"] = d.modular_on_center;
        r["m1_vs_t"] = verdict_json(e, d.continuity);
        r["m2_vs_t"] = verdict_json(e, d.orthogonal);
        m1 = std::move(d.continuous);
        m2 = std::move(d.singular);
    } else {
        const auto polytope = state_space(e);
        if (a.face) {
            const auto x = parse_label_list(e, *a.face);
            const Face face = kernel_face(e, polytope, x);
            auto d = face_decompose(e, polytope, face, m);
            r["mode"] = "face";
            r["kernel"] = label_array(e, x);
            r["engine"] = engine_json(polytope, face, d.certificate);
            m1 = std::move(d.in_face);
            m2 = std::move(d.singular);
        } else if (a.lebesgue || a.eps_lebesgue) {
            const bool eps = bool(a.eps_lebesgue);
            const std::string& tpath = eps ? *a.eps_lebesgue : *a.lebesgue;
            const auto t = load_measure(e, tpath);
            auto d = eps ? eps_lebesgue_decompose(e, polytope, m, t) : lebesgue_decompose(e, polytope, m, t);
            r["mode"] = eps ? "eps-lebesgue" : "lebesgue";
            r["reference"] = tpath;
            r["engine"] = engine_json(polytope, d.face, d.engine);
            r["m1_vs_t"] = verdict_json(e, d.continuity);
            if (d.singular_meet_zero) r["m2_meet_t_zero"] = *d.singular_meet_zero;
            m1 = std::move(d.continuous);
            m2 = std::move(d.singular);
        } else {
            YosidaHewittMode mode;
            if (*a.yosida_hewitt == "ca") mode = YosidaHewittMode::CompletelyAdditive;
            else if (*a.yosida_hewitt == "sigma") mode = YosidaHewittMode::Sigma;
            else if (*a.yosida_hewitt == "uc") mode = YosidaHewittMode::UpwardsContinuous;
            else throw CLI::ValidationError("--yosida-hewitt", "mode must be ca, sigma or uc");
            auto d = yosida_hewitt_decompose(e, polytope, m, mode);
            r["mode"] = std::string("yosida-hewitt-") + mode_name(mode);
            r["engine"] = engine_json(polytope, d.face, d.engine);
            r["measure_trace"] = trace_json(e, d.measure_trace);
            Json traces = Json::array();
            for (const auto& t : d.state_traces) traces.push_back(trace_json(e, t));
            r["state_traces"] = traces;
            r["finite_scale"] = "the regular face is the whole state space, so m2 = 0";
            m1 = std::move(d.regular);
            m2 = std::move(d.singular);
        }
    }
    write_file(prefix + ".m1.pm", export_measure(e, *m1));
    write_file(prefix + ".m2.pm", export_measure(e, *m2));
    r["m1"] = prefix + ".m1.pm";
    r["m2"] = prefix + ".m2.pm";
    if (opt.format == "json") std::cout << r.dump(2) << "\n";
    else print_text(r);
    return 0;
}

void report_error(const Error& err, const PseudoEffectAlgebra* e = nullptr) {
    std::cerr << "error: " << err.what() << "\n";
    if (!err.witness().empty()) {
        std::cerr << "witness:";
        for (Element x : err.witness()) std::cerr << " " << (e && x < e->size() ? e->label(x) : "#" + std::to_string(x));
        std::cerr << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite pseudo effect algebras: axioms, Riesz properties, states and measure decompositions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string("pea ") + kVersion);
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "Seed for randomized commands")->envname("PEA_SEED");

    std::string algebra_path;
    std::string out;

    auto* check = app.add_subcommand("check", "Validate an algebra and report its Riesz profile and state space");
    check->add_option("algebra", algebra_path)->required();

    std::string expression;
    auto* zoo_cmd = app.add_subcommand("zoo", "Export a standard algebra, e.g. 'product(chain(2),boolean(2))'");
    zoo_cmd->add_option("expression", expression)->required();
    zoo_cmd->add_option("-o,--output", out, "Output file (stdout if omitted)");

    auto* states = app.add_subcommand("states", "List the extreme states, one comma-separated line each");
    states->add_option("algebra", algebra_path)->required();

    std::vector<std::string> measures;
    auto* join_cmd = app.add_subcommand("join", "Lattice join of signed measures");
    auto* meet_cmd = app.add_subcommand("meet", "Lattice meet of signed measures");
    for (auto* sub : {join_cmd, meet_cmd}) {
        sub->add_option("algebra", algebra_path)->required();
        sub->add_option("measures", measures)->required();
        sub->add_option("-o,--output", out, "Output file (stdout if omitted)");
    }

    std::string measure_path;
    std::string prefix;
    auto* jordan_cmd = app.add_subcommand("jordan", "Positive and negative parts of a signed measure");
    jordan_cmd->add_option("algebra", algebra_path)->required();
    jordan_cmd->add_option("measure", measure_path)->required();
    jordan_cmd->add_option("-o,--output", prefix, "Prefix for the component files")->required();

    unsigned scale = 2;
    auto* sample = app.add_subcommand("sample", "Seeded random measure in the cone of states");
    sample->add_option("algebra", algebra_path)->required();
    sample->add_option("--scale", scale, "Coefficient bound")->check(CLI::Range(1u, 1000u));
    sample->add_option("-o,--output", out, "Output file (stdout if omitted)");

    auto* center_cmd = app.add_subcommand("center", "List the central elements");
    center_cmd->add_option("algebra", algebra_path)->required();

    DecomposeArgs dec;
    auto* decompose = app.add_subcommand("decompose", "Split a measure into two components");
    decompose->add_option("algebra", dec.algebra)->required();
    decompose->add_option("measure", dec.measure)->required();
    decompose->add_option("-o,--output", dec.prefix, "Prefix for PREFIX.m1.pm and PREFIX.m2.pm");
    auto* group = decompose->add_option_group("mode");
    group->add_option("--face", dec.face, "Kernel face of the comma-separated labels X");
    group->add_option("--lebesgue", dec.lebesgue, "Reference measure t for m1 << t");
    group->add_option("--eps-lebesgue", dec.eps_lebesgue, "Reference measure t for m1 <<_eps t");
    group->add_option("--central", dec.central, "Reference measure t for the central split");
    group->add_option("--yosida-hewitt", dec.yosida_hewitt, "ca, sigma or uc");
    group->require_option(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (*check) return cmd_check(opt, algebra_path);
        if (*zoo_cmd) return cmd_zoo(expression, out);
        if (*states) return cmd_states(opt, algebra_path);
        if (*join_cmd) return cmd_lattice("join", algebra_path, measures, out);
        if (*meet_cmd) return cmd_lattice("meet", algebra_path, measures, out);
        if (*jordan_cmd) return cmd_jordan(opt, algebra_path, measure_path, prefix);
        if (*sample) return cmd_sample(opt, algebra_path, scale, out);
        if (*center_cmd) return cmd_center(opt, algebra_path);
        if (*decompose) return cmd_decompose(opt, dec);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        report_error(e);
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
