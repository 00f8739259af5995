#include "polyred/cli.hpp"

#include "polyred/campaign.hpp"
#include "polyred/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace polyred {

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
}

// "1,3" -> {0, 2}
std::vector<std::size_t> parse_indices(const std::string& text, std::size_t k) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v < 1 || v > k)
            throw std::invalid_argument("form index '" + item + "' must be an integer in [1, " + std::to_string(k) + "]");
        out.push_back(v - 1);
    }
    if (out.empty()) throw std::invalid_argument("empty form index list");
    return out;
}

struct ModelSpec {
    std::size_t k = 0, n = 0;
    bool cosymplectic = true;
};

// "k=2,n=1" with an optional ",sym" for the polysymplectic model
ModelSpec parse_model(const std::string& text) {
    ModelSpec m;
    std::stringstream ss(text);
    std::string item;
    bool have_k = false, have_n = false;
    while (std::getline(ss, item, ',')) {
        if (item == "sym") {
            m.cosymplectic = false;
            continue;
        }
        if (item == "cosym") continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad model token '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(val, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != val.size() || v < 1 || v > 8) throw std::invalid_argument("model value '" + val + "' must lie in [1, 8]");
        if (key == "k") {
            m.k = v;
            have_k = true;
        } else if (key == "n") {
            m.n = v;
            have_n = true;
        } else {
            throw std::invalid_argument("unknown model key '" + key + "'");
        }
    }
    if (!have_k || !have_n) throw std::invalid_argument("model needs both k and n, e.g. k=2,n=1");
    return m;
}

void render_human(const json& j, std::ostream& out, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const json& v) {
        if (!v.is_array()) return false;
        return std::all_of(v.begin(), v.end(), [](const json& e) {
            return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const json& x) {
                                            return x.is_primitive();
                                        }));
        });
    };
    if (j.is_object()) {
        for (const auto& [key, v] : j.items()) {
            if (v.is_primitive()) {
                out << pad << key << ": " << scalar(v) << '\n';
            } else if (flat(v)) {
                out << pad << key << ": " << v.dump() << '\n';
            } else {
                out << pad << key << ":\n";
                render_human(v, out, indent + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_primitive() || flat(v)) {
                out << pad << "- " << (v.is_primitive() ? scalar(v) : v.dump()) << '\n';
            } else {
                out << pad << "-\n";
                render_human(v, out, indent + 1);
            }
        }
    } else {
        out << pad << scalar(j) << '\n';
    }
}

struct Emitter {
    std::ostream& out;
    bool human = false;
    void operator()(const json& report) const {
        if (human)
            render_human(report, out);
        else
            out << report.dump(2) << '\n';
    }
};

json echo(const std::vector<std::string>& args) {
    json j = json::array();
    for (const auto& a : args) j.push_back(a);
    return j;
}

int cmd_validate(const std::string& path, json& report) {
    FormFamily f = form_family_from_json(read_json_file(path));
    StructureKind kind = identify_structure(f);
    report["structure"] = to_json(kind);
    if (kind.tag == StructureTag::Polycosymplectic) {
        ReebFrame r = reeb_solve(f);
        json legs = json::array();
        for (const auto& v : r.reeb) legs.push_back(to_json(v));
        report["reeb"] = legs;
    }
    return kind.ok() ? kExitOk : kExitViolation;
}

int cmd_orthogonal(const std::string& structure, const std::string& subspace, const std::string& indices, json& report) {
    FormFamily f = form_family_from_json(read_json_file(structure));
    Subspace s = subspace_from_json(read_json_file(subspace));
    if (s.ambient_dim() != f.dim()) throw std::invalid_argument("subspace and structure dimensions differ");
    std::vector<std::size_t> idx;
    if (indices.empty()) {
        for (std::size_t a = 0; a < f.k(); ++a) idx.push_back(a);
    } else {
        idx = parse_indices(indices, f.k());
    }
    json ij = json::array();
    for (auto i : idx) ij.push_back(i + 1);
    report["indices"] = ij;
    report["subspace"] = to_json(s);
    report["orthogonal"] = to_json(poly_orthogonal(s, f, idx));
    report["isotropic"] = is_isotropic(s, f);
    return kExitOk;
}

int cmd_reduce(const std::string& path, json& report) {
    ActionPointData d = action_from_json(read_json_file(path));
    LinearReduction r = linear_reduce(d);
    report["reduction"] = to_json(r);
    if (d.g_dim) report["dimensions"] = to_json(dimension_check(d, *d.g_dim));
    return r.condition_holds && r.reduced_kind.ok() ? kExitOk : kExitViolation;
}

int cmd_check(const std::string& condition, const std::string& path, json& report) {
    ConditionId id = parse_condition(condition);
    ActionPointData d = action_from_json(read_json_file(path));
    ConditionReport r = check_condition(d, id);
    report["report"] = to_json(r);
    return r.holds ? kExitOk : kExitViolation;
}

int cmd_lift(const std::string& path, const std::string& output, json& report) {
    json in = read_json_file(path);
    if (in.contains("gtilde")) {
        // action data: lift it and run the equivalence audit
        ActionPointData d = action_from_json(in);
        ActionPointData lifted = lift_action(d);
        EquivalenceReport eq = equivalence_check(d);
        LiftLemmaReport lemma = verify_lift_lemma(d);
        report["lifted"] = to_json(lifted);
        report["equivalence"] = to_json(eq);
        report["lift_identities"] = to_json(lemma);
        if (!output.empty()) std::ofstream(output) << to_json(lifted).dump(2) << '\n';
        return eq.holds() && lemma.holds() ? kExitOk : kExitViolation;
    }
    FormFamily f = form_family_from_json(in);
    LiftedFamily l = lift_structure(f);
    report["base_kind"] = to_json(l.base_kind);
    report["lifted_kind"] = to_json(l.lifted_kind);
    report["lifted"] = to_json(l.lifted);
    report["s_index"] = l.s_index;
    report["iff_applicable"] = l.iff_applicable;
    report["iff_consistent"] = l.iff_consistent;
    report["round_trip"] = recover(l) == f;
    if (!output.empty()) {
        std::ofstream o(output);
        if (!o) throw std::invalid_argument("cannot write '" + output + "'");
        o << to_json(l.lifted).dump(2) << '\n';
    }
    return l.iff_consistent ? kExitOk : kExitViolation;
}

int cmd_example(const std::string& name, json& report) {
    ExampleBundle b = builtin_example(name);
    report["bundle"] = to_json(b);
    return b.all_passed() ? kExitOk : kExitViolation;
}

json matrix_of_polys(const std::vector<std::vector<MultiPoly>>& m) {
    json j = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& p : row) r.push_back(p.to_string());
        j.push_back(r);
    }
    return j;
}

json polys(const std::vector<MultiPoly>& v) {
    json j = json::array();
    for (const auto& p : v) j.push_back(p.to_string());
    return j;
}

json residual_json(const KVectorResidual& r) {
    return {{"all_zero", r.all_zero()}, {"form", polys(r.form)}, {"normalization", polys(r.normalization)}};
}

struct DynamicsArgs {
    std::string model, hamiltonian, section, kvector;
    std::string mode = "auto";
};

int cmd_dynamics(const std::string& action, const DynamicsArgs& a, json& report) {
    ModelSpec spec = parse_model(a.model);
    CoordinateModel m = standard_coordinates(spec.k, spec.n, spec.cosymplectic);
    report["model"] = {{"k", spec.k}, {"n", spec.n}, {"cosymplectic", spec.cosymplectic}, {"vars", m.vars}};
    if (a.hamiltonian.empty()) throw std::invalid_argument("--hamiltonian is required");
    MultiPoly h = poly_from_json(read_json_file(a.hamiltonian), m.vars);
    report["hamiltonian"] = h.to_string();

    if (action == "residual") {
        if (a.section.empty()) throw std::invalid_argument("residual needs --section");
        if (!spec.cosymplectic) throw std::invalid_argument("sections live on the cosymplectic model");
        PolySection s = section_from_json(read_json_file(a.section));
        if (s.k != spec.k || s.n != spec.n) throw std::invalid_argument("section shape does not match the model");
        HddwResidual r = hddw_residual(h, s);
        report["residual"] = {{"all_zero", r.all_zero()}, {"q", polys(r.q)}, {"p", matrix_of_polys(r.p)}};
        report["lifted_obstruction"] = matrix_of_polys(lifted_section_obstruction(h, s));
        return r.all_zero() ? kExitOk : kExitViolation;
    }
    if (action == "kvector" || action == "lift" || action == "obstruction") {
        if (a.kvector.empty()) throw std::invalid_argument(action + " needs --kvector");
        PolyKVector x = kvector_from_json(read_json_file(a.kvector), m.vars);
        if (x.legs.size() != spec.k) throw std::invalid_argument("k-vector must have k legs");
        KMode mode = spec.cosymplectic ? KMode::KCosym : KMode::KSym;
        if (a.mode == "ksym") mode = KMode::KSym;
        else if (a.mode == "kcosym") mode = KMode::KCosym;
        else if (a.mode != "auto") throw std::invalid_argument("--mode must be auto, ksym or kcosym");
        if (action == "kvector") {
            KVectorResidual r = kvector_residual(m, h, x, mode);
            report["mode"] = mode == KMode::KSym ? "kSym" : "kCosym";
            report["residual"] = residual_json(r);
            return r.all_zero() ? kExitOk : kExitViolation;
        }
        if (!spec.cosymplectic) throw std::invalid_argument(action + " needs the cosymplectic model");
        if (action == "obstruction") {
            report["obstruction"] = matrix_of_polys(integrability_obstruction(m, h, x));
            return kExitOk;
        }
        LiftedDynamicsReport r = lift_dynamics_verify(m, h, x);
        report["h_tilde"] = r.h_tilde.to_string();
        report["x_tilde"] = to_json(r.x_tilde);
        report["residual"] = residual_json(r.residual);
        return r.holds ? kExitOk : kExitViolation;
    }
    throw std::invalid_argument("unknown dynamics action '" + action + "'");
}

struct CampaignArgs {
    std::string property;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t dim_max = 10, k_max = 3;
    std::string fraction = "1/4";
    unsigned threads = 0;
    std::optional<std::uint64_t> replay_seed;
    bool replay_adversarial = false;
};

int cmd_campaign(const CampaignArgs& a, json& report) {
    CampaignConfig cfg;
    cfg.property = parse_property(a.property);
    cfg.trials = a.trials;
    cfg.master_seed = a.seed;
    cfg.dim_max = a.dim_max;
    cfg.k_max = a.k_max;
    cfg.adversarial_fraction = Rational::parse(a.fraction);
    cfg.threads = a.threads;
    cfg.validate();
    if (a.replay_seed) {
        auto start = std::chrono::steady_clock::now();
        TrialOutcome t = run_trial(cfg, *a.replay_seed, a.replay_adversarial);
        report["replay"] = {{"property", to_string(cfg.property)}, {"seed", t.seed}, {"adversarial", t.adversarial},
                            {"passed", t.passed}, {"flags", t.flags}, {"instance", t.instance}};
        report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return t.passed ? kExitOk : kExitViolation;
    }
    CampaignReport r = run_campaign(cfg);
    report["campaign"] = report_json(r);
    return r.property_holds ? kExitOk : kExitViolation;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact linear and polynomial checks for poly(co)symplectic reduction", "polyred"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --human follow the subcommand
    bool human = false;
    app.add_flag("--human", human, "render the report as indented text");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "classify a structure JSON");
    validate->add_option("structure", validate_path, "structure JSON file")->required();

    std::string ortho_structure, ortho_subspace, ortho_indices;
    auto* ortho = app.add_subcommand("orthogonal", "poly-orthogonal complement of a subspace");
    ortho->add_option("--structure", ortho_structure, "structure JSON file")->required();
    ortho->add_option("--subspace", ortho_subspace, "subspace JSON file")->required();
    ortho->add_option("--indices", ortho_indices, "comma-separated 1-based form indices (default: all)");

    std::string reduce_path;
    auto* reduce = app.add_subcommand("reduce", "linear reduction of action point data");
    reduce->add_option("--input,input", reduce_path, "action JSON file")->required();

    std::string check_condition_id, check_path;
    auto* check = app.add_subcommand("check", "evaluate one reduction condition");
    check->add_option("--condition", check_condition_id, "NONDEG_POLYSYM, NONDEG_POLYCO, A1, A2, C1 or ALBERT_K1")
        ->required();
    check->add_option("--input", check_path, "action JSON file")->required();

    std::string lift_path, lift_output;
    auto* lift = app.add_subcommand("lift", "lift a structure (or action data) to one more dimension");
    lift->add_option("--input,input", lift_path, "structure or action JSON file")->required();
    lift->add_option("--output,-o", lift_output, "also write the lifted JSON here");

    std::string example_name;
    auto* example = app.add_subcommand("example", "run a built-in worked example");
    example->add_option("name", example_name, "example name")->required();
    bool example_list = false;
    example->add_flag("--list", example_list, "list the example names");

    std::string dyn_action;
    DynamicsArgs dyn;
    auto* dynamics = app.add_subcommand("dynamics", "polynomial field-equation checks");
    dynamics->add_option("action", dyn_action, "residual, kvector, lift or obstruction")->required();
    dynamics->add_option("--model", dyn.model, "k=K,n=N[,sym]")->required();
    dynamics->add_option("--hamiltonian", dyn.hamiltonian, "polynomial JSON file");
    dynamics->add_option("--section", dyn.section, "section JSON file");
    dynamics->add_option("--kvector", dyn.kvector, "k-vector JSON file");
    dynamics->add_option("--mode", dyn.mode, "auto, ksym or kcosym");

    CampaignArgs camp;
    std::uint64_t replay_seed = 0;
    auto* campaign = app.add_subcommand("campaign", "randomized property campaign");
    campaign->add_option("--property", camp.property, "property id")->required();
    campaign->add_option("--trials", camp.trials, "number of trials");
    campaign->add_option("--seed", camp.seed, "master seed");
    campaign->add_option("--dim-max", camp.dim_max, "largest ambient dimension");
    campaign->add_option("--k-max", camp.k_max, "largest number of forms");
    campaign->add_option("--adversarial-fraction", camp.fraction, "rational in [0, 1]");
    campaign->add_option("--threads", camp.threads, "worker threads (default: POLYRED_THREADS or all cores)");
    auto* replay_opt = campaign->add_option("--replay-seed", replay_seed, "rerun the single trial with this seed");
    campaign->add_flag("--adversarial", camp.replay_adversarial, "the replayed trial is adversarial");

    // CLI11 consumes the vector from the back
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        // a bare `example --list` should not demand a name
        if (args.size() >= 2 && args[0] == "example" && args[1] == "--list") example->get_option("name")->required(false);
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "polyred: " << e.what() << '\n';
        return kExitInputError;
    }
    if (replay_opt->count() > 0) camp.replay_seed = replay_seed;

    Emitter emit{out, human};
    json report;
    report["command"] = echo(args);
    int code = kExitOk;
    try {
        if (*validate) {
            code = cmd_validate(validate_path, report);
        } else if (*ortho) {
            code = cmd_orthogonal(ortho_structure, ortho_subspace, ortho_indices, report);
        } else if (*reduce) {
            code = cmd_reduce(reduce_path, report);
        } else if (*check) {
            code = cmd_check(check_condition_id, check_path, report);
        } else if (*lift) {
            code = cmd_lift(lift_path, lift_output, report);
        } else if (*example) {
            if (example_list) {
                report["examples"] = builtin_example_names();
            } else {
                code = cmd_example(example_name, report);
            }
        } else if (*dynamics) {
            code = cmd_dynamics(dyn_action, dyn, report);
        } else if (*campaign) {
            code = cmd_campaign(camp, report);
        }
    } catch (const std::invalid_argument& e) {
        err << "polyred: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::logic_error& e) {
        // domain and shape errors raised on user data
        err << "polyred: " << e.what() << '\n';
        return kExitInputError;
    } catch (const json::exception& e) {
        err << "polyred: bad JSON: " << e.what() << '\n';
        return kExitInputError;
    }
    report["verdict"] = code == kExitOk ? "ok" : "violated";
    report["exit_code"] = code;
    emit(report);
    return code;
}

}  // namespace polyred
