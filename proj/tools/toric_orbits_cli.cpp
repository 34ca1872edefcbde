#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "toric/errors.hpp"
#include "toric/io.hpp"

using namespace toric;

namespace {

struct Options {
    std::string fan_file;
    std::string family;
    std::optional<long long> param;
    bool json = false;
    bool dot = false;
    std::string oracle = "monoid";
};

Fan load_fan(const Options& opt) {
    if (!opt.family.empty() && !opt.fan_file.empty())
        throw ValidationError("give either a fan file or --family, not both");
    if (!opt.family.empty()) return make_family(opt.family, opt.param);
    if (opt.fan_file.empty()) throw ValidationError("a fan file or --family is required");
    if (opt.param) throw ValidationError("--param only applies to --family");
    std::string text;
    if (opt.fan_file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(opt.fan_file, std::ios::binary);
        if (!in) throw ValidationError("cannot open file: " + opt.fan_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return document_to_fan(parse_fan_document(text));
}

void emit(bool as_json, const std::string& text, const nlohmann::ordered_json& j) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"orbit structure of the automorphism group of a complete toric variety"};
    app.require_subcommand(1);

    std::function<int()> action;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("fan", opt.fan_file, "fan document (JSON file, or - for stdin)");
        sub->add_option("--family", opt.family,
                        "family expression: pp n | hirzebruch s | wp11s s | bsurface s | "
                        "product(expr, expr, ...)");
        sub->add_option("--param", opt.param, "parameter for a bare family name");
        return sub->add_flag("--json", opt.json, "structured output");
    };

    auto install = [&](CLI::App* sub, std::function<int()> fn) {
        sub->callback([&action, fn] { action = fn; });
    };

    CLI::App* clgroup = app.add_subcommand("clgroup", "divisor class group and ray classes");
    add_input(clgroup);
    install(clgroup, [&] {
        Fan fan = load_fan(opt);
        ClassGroup cg = compute_class_group(fan);
        emit(opt.json, clgroup_text(fan, cg), clgroup_json(fan, cg));
        return 0;
    });

    CLI::App* roots = app.add_subcommand("roots", "Demazure roots of the fan");
    add_input(roots);
    install(roots, [&] {
        Fan fan = load_fan(opt);
        RootSet rs = demazure_roots(fan);
        emit(opt.json, roots_text(fan, rs), roots_json(fan, rs));
        return 0;
    });

    CLI::App* ups = app.add_subcommand("upsilon", "distinct ray-class monoids over all cones");
    add_input(ups);
    install(ups, [&] {
        Fan fan = load_fan(opt);
        ClassGroup cg = compute_class_group(fan);
        UpsilonCollection collection = upsilon(fan, cg);
        emit(opt.json, upsilon_text(fan, collection), upsilon_json(fan, collection));
        return 0;
    });

    CLI::App* classify =
        app.add_subcommand("classify", "orbit classes of the connected automorphism group");
    add_input(classify);
    classify->add_option("--oracle", opt.oracle, "classifier: monoid (default) or bfs")
        ->check(CLI::IsMember({"monoid", "bfs"}));
    install(classify, [&] {
        Fan fan = load_fan(opt);
        ClassGroup cg = compute_class_group(fan);
        std::vector<OrbitClass> classes;
        if (opt.oracle == "bfs")
            classes = orbit_classes_from_partition(
                fan, cg, bfs_oracle_classification(fan, demazure_roots(fan)));
        else
            classes = classify_aut0(fan, cg);
        emit(opt.json, classify_text(fan, classes), classify_json(fan, classes));
        return 0;
    });

    CLI::App* classify_full =
        app.add_subcommand("classify-aut", "orbit classes of the full automorphism group");
    add_input(classify_full);
    install(classify_full, [&] {
        Fan fan = load_fan(opt);
        ClassGroup cg = compute_class_group(fan);
        auto classes = classify_aut0(fan, cg);
        auto merged = classify_aut(fan, cg, classes);
        emit(opt.json, classify_aut_text(fan, classes, merged),
             classify_aut_json(fan, classes, merged));
        return 0;
    });

    CLI::App* poset = app.add_subcommand("poset", "orbit closure order between classes");
    CLI::Option* poset_json_flag = add_input(poset);
    poset->add_flag("--dot", opt.dot, "emit a DOT digraph")->excludes(poset_json_flag);
    install(poset, [&] {
        Fan fan = load_fan(opt);
        ClassGroup cg = compute_class_group(fan);
        OrbitPoset p = closure_poset(fan, cg, classify_aut0(fan, cg));
        if (opt.dot)
            std::cout << poset_dot(fan, p);
        else
            emit(opt.json, poset_text(fan, p), poset_json(fan, p));
        return 0;
    });

    CLI::App* syms = app.add_subcommand("symmetries", "lattice symmetries of the fan");
    add_input(syms);
    install(syms, [&] {
        Fan fan = load_fan(opt);
        auto group = fan_symmetries(fan);
        emit(opt.json, symmetries_text(fan, group), symmetries_json(fan, group));
        return 0;
    });

    CLI::App* trans =
        app.add_subcommand("transitivity", "does the automorphism group act transitively?");
    add_input(trans);
    install(trans, [&] {
        Fan fan = load_fan(opt);
        ClassGroup cg = compute_class_group(fan);
        bool transitive = is_transitive(fan, cg);
        auto factors = decompose_product(fan, cg, demazure_roots(fan));
        if (transitive != factors.has_value())
            throw InternalError("transitivity and product recognition disagree");
        emit(opt.json, transitivity_text(fan, transitive, factors),
             transitivity_json(fan, transitive, factors));
        return 0;
    });

    CLI::App* gen = app.add_subcommand("generate", "emit the fan document of a family");
    gen->add_option("--family", opt.family, "family expression");
    gen->add_option("--param", opt.param, "parameter for a bare family name");
    install(gen, [&] {
        if (opt.family.empty()) throw ValidationError("generate requires --family");
        Fan fan = make_family(opt.family, opt.param);
        std::cout << serialize_fan_document(document_from_fan(fan));
        return 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
