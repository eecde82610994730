#include "gq/cli.hpp"

#include "gq/counting.hpp"
#include "gq/enumeration.hpp"
#include "gq/error.hpp"
#include "gq/galkin.hpp"
#include "gq/knots.hpp"
#include "gq/table_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#ifndef GQ_DEFAULT_DATASET
#define GQ_DEFAULT_DATASET "data/knots8.txt"
#endif

namespace gq {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    bool json = false;
    BruteForceLimits limits;
};

bool parse_suffix_int(const std::string& text, const std::string& prefix, int& value) {
    if (text.rfind(prefix, 0) != 0 || text.size() == prefix.size()) return false;
    const std::string digits = text.substr(prefix.size());
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) return false;
    if (digits.size() > 6) throw DomainError("order in '" + text + "' is too large");
    value = std::stoi(digits);
    return true;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

// Equal column types grouped with their multiplicity, in sorted order.
std::vector<std::pair<std::vector<int>, int>> grouped_profile(const std::vector<std::vector<int>>& profile) {
    std::vector<std::pair<std::vector<int>, int>> out;
    for (const auto& t : profile) {
        if (!out.empty() && out.back().first == t)
            ++out.back().second;
        else
            out.emplace_back(t, 1);
    }
    return out;
}

json report_json(const PropertyReport& r) {
    json profile = json::array();
    for (const auto& [type, count] : grouped_profile(r.cycle_profile))
        profile.push_back({{"cycle_type", type}, {"columns", count}});
    return {{"connected", r.connected},
            {"latin", r.latin},
            {"faithful", r.faithful},
            {"medial", r.medial},
            {"left_distributive", r.left_distributive},
            {"kei", r.kei},
            {"self_dual", r.self_dual},
            {"r3_subquandle", r.r3_subquandle},
            {"cycle_profile", profile}};
}

std::vector<std::pair<std::string, bool>> report_flags(const PropertyReport& r) {
    return {{"connected", r.connected},     {"latin", r.latin}, {"faithful", r.faithful},
            {"medial", r.medial},           {"left_distributive", r.left_distributive},
            {"kei", r.kei},                 {"self_dual", r.self_dual},
            {"r3_subquandle", r.r3_subquandle}};
}

void print_profile(std::ostream& out, const std::vector<std::vector<int>>& profile) {
    out << "cycle profile:";
    for (const auto& [type, count] : grouped_profile(profile)) out << " " << count << " x {" << join(type) << "}";
    out << "\n";
}

void print_table(std::ostream& out, const Quandle& q) {
    for (int a = 0; a < q.order(); ++a) {
        for (int b = 0; b < q.order(); ++b) out << (b ? " " : "") << q.op(a, b);
        out << "\n";
    }
}

json table_json(const Quandle& q) { return q.rows(); }

std::string braid_or_name(const std::string& braid, const std::string& name, const std::string& dataset,
                          BraidWord& word) {
    if (!braid.empty() && !name.empty()) throw DomainError("give either --braid or --name, not both");
    if (!braid.empty()) {
        word = parse_braid(braid);
        return braid;
    }
    if (name.empty()) throw DomainError("one of --braid or --name is required");
    const auto records = load_knot_table(dataset);
    word = find_knot(records, name).braid;
    return name;
}

ColoringMethod parse_method(const std::string& m) {
    if (m == "auto") return ColoringMethod::Auto;
    if (m == "braid") return ColoringMethod::BraidAction;
    if (m == "arc") return ColoringMethod::Arc;
    throw DomainError("unknown coloring method '" + m + "' (auto, braid, arc)");
}

} // namespace

Quandle resolve_quandle(const std::string& text, bool transposed) {
    int n = 0;
    if (parse_suffix_int(text, "R", n)) return dihedral(n);
    if (parse_suffix_int(text, "trivial-", n)) return trivial_quandle(n);
    if (text.rfind("G(", 0) == 0) return build(parse_galkin(text)).quandle;
    if (!std::filesystem::exists(text))
        throw ParseError("'" + text + "' is not R<n>, trivial-<n>, a Galkin literal, or an existing table file");
    return load_quandle(text, transposed);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Galkin quandles, quandle tables and knot colorings"};
    app.name("gq");
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "Emit a single JSON document");
    app.add_option("--max-group-order", opt.limits.max_group_order, "Brute-force bound on |A|")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-automorphisms", opt.limits.max_automorphisms, "Bound on |Aut(A)| for enumeration");

    std::function<void()> action;

    // galkin
    auto* galkin = app.add_subcommand("galkin", "Galkin quandles G(A,c1,c2)");
    galkin->require_subcommand(1);
    std::string spec_a, spec_b;
    int order = 0;

    auto* g_build = galkin->add_subcommand("build", "Operation table with element legend");
    g_build->add_option("spec", spec_a, "Galkin literal, e.g. G(Z2xZ4,[0,0],[1,2])")->required();
    g_build->callback([&] {
        action = [&] {
            const auto t = build(parse_galkin(spec_a), opt.limits);
            if (opt.json) {
                out << json{{"spec", t.spec.to_string()},
                            {"order", t.quandle.order()},
                            {"legend", t.legend},
                            {"table", table_json(t.quandle)}}
                           .dump(2)
                    << "\n";
                return;
            }
            out << t.spec.to_string() << ", order " << t.quandle.order() << "\n";
            for (std::size_t i = 0; i < t.legend.size(); ++i) out << i << " = " << t.legend[i] << "\n";
            print_table(out, t.quandle);
        };
    });

    auto* g_props = galkin->add_subcommand("props", "Computed and predicted properties");
    g_props->add_option("spec", spec_a, "Galkin literal")->required();
    g_props->callback([&] {
        action = [&] {
            const auto spec = parse_galkin(spec_a);
            const auto computed = property_report(build(spec, opt.limits).quandle);
            const auto predicted = predicted_properties(spec);
            if (opt.json) {
                out << json{{"spec", spec.to_string()},
                            {"computed", report_json(computed)},
                            {"predicted", report_json(predicted)},
                            {"agree", computed == predicted}}
                           .dump(2)
                    << "\n";
                return;
            }
            out << spec.to_string() << "\n";
            const auto c = report_flags(computed), p = report_flags(predicted);
            for (std::size_t i = 0; i < c.size(); ++i)
                out << c[i].first << ": " << yes_no(c[i].second) << " (predicted " << yes_no(p[i].second) << ")\n";
            print_profile(out, computed.cycle_profile);
            out << (computed == predicted ? "prediction agrees" : "PREDICTION MISMATCH") << "\n";
        };
    });

    auto* g_norm = galkin->add_subcommand("normalize", "Rewrite as G(A,0,c2-c1) with the isomorphism");
    g_norm->add_option("spec", spec_a, "Galkin literal")->required();
    g_norm->callback([&] {
        action = [&] {
            const auto spec = parse_galkin(spec_a);
            const auto n = normalize(spec);
            if (opt.json) {
                out << json{{"spec", spec.to_string()}, {"normalized", n.spec.to_string()}, {"eta", n.eta}}.dump(2)
                    << "\n";
                return;
            }
            out << n.spec.to_string() << "\n";
            for (std::size_t i = 0; i < n.eta.size(); ++i)
                out << galkin_label(spec.group, static_cast<int>(i)) << " -> "
                    << galkin_label(spec.group, n.eta[i]) << "\n";
        };
    });

    auto* g_iso = galkin->add_subcommand("iso", "Decide isomorphism through pointed groups");
    g_iso->add_option("first", spec_a, "Galkin literal")->required();
    g_iso->add_option("second", spec_b, "Galkin literal")->required();
    g_iso->callback([&] {
        action = [&] {
            const auto s = normalize(parse_galkin(spec_a)).spec;
            const auto t = normalize(parse_galkin(spec_b)).spec;
            json doc{{"first", s.to_string()}, {"second", t.to_string()}};
            std::string text;
            if (!(s.group == t.group)) {
                doc["isomorphic"] = false;
                doc["reason"] = "groups differ";
                text = "not isomorphic (groups differ: " + s.group.to_string() + " vs " + t.group.to_string() + ")";
            } else if (auto h = pointed_isomorphism({s.group, s.c2}, {t.group, t.c2}, opt.limits)) {
                std::vector<std::string> images;
                for (const auto& img : h->images()) images.push_back(img.to_string());
                doc["isomorphic"] = true;
                doc["automorphism"] = images;
                text = "isomorphic (automorphism sends the generators to";
                for (const auto& img : images) text += " " + img;
                text += ")";
            } else {
                const bool same_profile = cycle_profile(build(s, opt.limits).quandle) ==
                                          cycle_profile(build(t, opt.limits).quandle);
                const std::string reason =
                    std::string("pointed orbits differ; cycle profiles ") + (same_profile ? "equal" : "differ");
                doc["isomorphic"] = false;
                doc["reason"] = reason;
                text = "not isomorphic (" + reason + ")";
            }
            if (opt.json)
                out << doc.dump(2) << "\n";
            else
                out << text << "\n";
        };
    });

    auto* g_classify = galkin->add_subcommand("classify", "Isomorphism classes of a given order");
    g_classify->add_option("--order", order, "Quandle order 3n")->required();
    g_classify->callback([&] {
        action = [&] {
            const auto classes = classify_order(order, opt.limits);
            json doc{{"order", order}, {"classes", json::array()}};
            if (!opt.json) out << "order " << order << ": " << classes.size() << " classes\n";
            for (const auto& spec : classes) {
                const auto rig = rig_lookup(spec, opt.limits);
                json entry{{"group", spec.group.to_string()}, {"point", spec.c2.to_string()}};
                if (rig.name) entry["rig_name"] = *rig.name;
                if (!rig.conflicts.empty()) entry["rig_conflict"] = rig.conflicts;
                entry["properties"] = report_json(predicted_properties(spec));
                doc["classes"].push_back(entry);
                if (!opt.json) {
                    out << spec.to_string();
                    if (rig.name) out << "  " << *rig.name;
                    if (!rig.conflicts.empty()) out << "  (catalog name withheld: " << rig.conflicts.front() << ")";
                    out << "\n";
                }
            }
            if (opt.json) out << doc.dump(2) << "\n";
        };
    });

    // quandle
    auto* quandle = app.add_subcommand("quandle", "Generic quandle tables");
    quandle->require_subcommand(1);
    std::string qa, qb;
    bool transposed = false;
    int max_order = 8;

    auto* q_check = quandle->add_subcommand("check", "Validate a table file against the axioms");
    q_check->add_option("file", qa, "Table file")->required();
    q_check->add_flag("--transposed", transposed, "Rows of the file are columns");
    q_check->callback([&] {
        action = [&] {
            std::ifstream in(qa);
            if (!in) throw ParseError("cannot open table file '" + qa + "'");
            const auto check = check_axioms(read_table(in, transposed));
            if (opt.json) {
                json doc{{"valid", check.ok()}};
                if (check.ok()) doc["order"] = check.quandle->order();
                if (check.violation) doc["violation"] = check.violation->describe();
                out << doc.dump(2) << "\n";
            } else if (check.ok()) {
                out << "valid quandle of order " << check.quandle->order() << "\n";
            } else {
                out << "not a quandle: " << check.violation->describe() << "\n";
            }
            if (!check.ok()) throw DomainError("table violates the quandle axioms");
        };
    });

    auto* q_props = quandle->add_subcommand("props", "Property report");
    q_props->add_option("quandle", qa, "R<n>, trivial-<n>, Galkin literal, or table file")->required();
    q_props->add_flag("--transposed", transposed, "Rows of the file are columns");
    q_props->callback([&] {
        action = [&] {
            const auto q = resolve_quandle(qa, transposed);
            const auto r = property_report(q);
            if (opt.json) {
                out << json{{"quandle", qa}, {"order", q.order()}, {"properties", report_json(r)}}.dump(2) << "\n";
                return;
            }
            out << qa << ", order " << q.order() << "\n";
            for (const auto& [name, value] : report_flags(r)) out << name << ": " << yes_no(value) << "\n";
            print_profile(out, r.cycle_profile);
        };
    });

    auto* q_iso = quandle->add_subcommand("iso", "Table-level isomorphism search");
    q_iso->add_option("first", qa, "Quandle")->required();
    q_iso->add_option("second", qb, "Quandle")->required();
    q_iso->add_flag("--transposed", transposed, "Rows of table files are columns");
    q_iso->callback([&] {
        action = [&] {
            const auto f = isomorphism(resolve_quandle(qa, transposed), resolve_quandle(qb, transposed));
            if (opt.json) {
                json doc{{"isomorphic", f.has_value()}};
                if (f) doc["witness"] = *f;
                out << doc.dump(2) << "\n";
            } else if (f) {
                out << "isomorphic: [" << join(*f) << "]\n";
            } else {
                out << "not isomorphic\n";
            }
        };
    });

    auto* q_inv = quandle->add_subcommand("involutions", "All good involutions");
    q_inv->add_option("quandle", qa, "Quandle")->required();
    q_inv->add_flag("--transposed", transposed, "Rows of the file are columns");
    q_inv->callback([&] {
        action = [&] {
            const auto all = good_involutions(resolve_quandle(qa, transposed));
            if (opt.json) {
                out << json{{"count", all.size()}, {"involutions", all}}.dump(2) << "\n";
                return;
            }
            out << all.size() << " good involutions\n";
            for (const auto& rho : all) out << "[" << join(rho) << "]\n";
        };
    });

    auto* q_ident = quandle->add_subcommand("identify", "Locate a connected quandle in the census");
    q_ident->add_option("quandle", qa, "Quandle")->required();
    q_ident->add_flag("--transposed", transposed, "Rows of the file are columns");
    q_ident->add_option("--max-order", max_order, "Enumeration bound");
    q_ident->callback([&] {
        action = [&] {
            const auto q = resolve_quandle(qa, transposed);
            const auto census = enumerate_connected(q.order(), max_order);
            const auto idx = identify(q, census);
            if (opt.json) {
                json doc{{"order", q.order()}, {"census_size", census.size()}};
                doc["index"] = idx ? json(*idx) : json(nullptr);
                out << doc.dump(2) << "\n";
            } else if (idx) {
                out << "census entry " << *idx << " of " << census.size() << " at order " << q.order() << "\n";
            } else {
                out << "not in the census of connected quandles of order " << q.order() << "\n";
            }
        };
    });

    // enum
    auto* en = app.add_subcommand("enum", "Exhaustive enumeration");
    en->require_subcommand(1);
    std::string export_dir;
    auto* e_conn = en->add_subcommand("connected", "Connected quandles of one order up to isomorphism");
    e_conn->add_option("--order", order, "Order n")->required();
    e_conn->add_option("--max-order", max_order, "Enumeration bound");
    e_conn->add_option("--export", export_dir, "Write table files and index.json to this directory");
    e_conn->callback([&] {
        action = [&] {
            const auto census = enumerate_connected(order, max_order);
            json doc{{"order", order}, {"count", census.size()}, {"entries", json::array()}};
            for (std::size_t i = 0; i < census.size(); ++i) {
                std::ostringstream key;
                for (auto byte : census[i].canonical_key)
                    key << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(byte);
                const std::string file = "order" + std::to_string(order) + "_" + std::to_string(i) + ".txt";
                doc["entries"].push_back({{"index", i},
                                          {"file", file},
                                          {"canonical_key", key.str()},
                                          {"properties", report_json(property_report(census[i].table))}});
                if (!export_dir.empty()) {
                    std::filesystem::create_directories(export_dir);
                    std::ofstream f(std::filesystem::path(export_dir) / file);
                    write_table(f, census[i].table);
                }
            }
            if (!export_dir.empty()) {
                std::ofstream f(std::filesystem::path(export_dir) / "index.json");
                f << doc.dump(2) << "\n";
            }
            if (opt.json) {
                out << doc.dump(2) << "\n";
                return;
            }
            out << "order " << order << ": " << census.size() << " connected quandles\n";
            for (std::size_t i = 0; i < census.size(); ++i) {
                out << "# " << i << "\n";
                print_table(out, census[i].table);
            }
        };
    });

    // knot
    auto* knot = app.add_subcommand("knot", "Braid-word knots");
    knot->require_subcommand(1);
    std::string braid, name, dataset = GQ_DEFAULT_DATASET, method = "auto", format = "csv";
    std::vector<std::string> quandle_args;

    auto* k_color = knot->add_subcommand("color", "Count colorings by a quandle");
    k_color->add_option("--braid", braid, "Braid word 's: w1 w2 ...'");
    k_color->add_option("--name", name, "Knot name in the dataset");
    k_color->add_option("--dataset", dataset, "Knot table file");
    k_color->add_option("--quandle", qa, "Quandle")->required();
    k_color->add_option("--method", method, "auto, braid or arc");
    k_color->add_flag("--transposed", transposed, "Rows of the table file are columns");
    k_color->callback([&] {
        action = [&] {
            BraidWord word;
            const std::string label = braid_or_name(braid, name, dataset, word);
            const auto q = resolve_quandle(qa, transposed);
            const auto count = count_colorings(word, q, parse_method(method));
            if (opt.json)
                out << json{{"knot", label},
                            {"quandle", qa},
                            {"colorings", count},
                            {"nontrivial", count > static_cast<std::uint64_t>(q.order())}}
                           .dump(2)
                    << "\n";
            else
                out << count << "\n";
        };
    });

    auto* k_det = knot->add_subcommand("det", "Knot determinant");
    k_det->add_option("--braid", braid, "Braid word");
    k_det->add_option("--name", name, "Knot name in the dataset");
    k_det->add_option("--dataset", dataset, "Knot table file");
    k_det->callback([&] {
        action = [&] {
            BraidWord word;
            const std::string label = braid_or_name(braid, name, dataset, word);
            const auto d = determinant(word);
            if (opt.json)
                out << json{{"knot", label}, {"determinant", d}}.dump(2) << "\n";
            else
                out << d << "\n";
        };
    });

    auto* k_prof = knot->add_subcommand("profile", "Coloring counts of every dataset knot");
    k_prof->add_option("--quandles", quandle_args, "Quandles (one or more)")->required()->expected(1, -1);
    k_prof->add_option("--dataset", dataset, "Knot table file");
    k_prof->add_option("--format", format, "csv or json (--json implies json)");
    k_prof->callback([&] {
        action = [&] {
            const auto knots = load_knot_table(dataset);
            std::vector<Quandle> qs;
            for (const auto& a : quandle_args) qs.push_back(resolve_quandle(a));
            const auto prof = coloring_profile(knots, qs);
            auto named = [&](const std::vector<std::vector<std::size_t>>& classes) {
                std::vector<std::vector<std::string>> out_classes;
                for (const auto& c : classes) {
                    auto& v = out_classes.emplace_back();
                    for (auto j : c) v.push_back(quandle_args[j]);
                }
                return out_classes;
            };
            if (opt.json || format == "json") {
                json rows = json::array();
                for (std::size_t i = 0; i < knots.size(); ++i)
                    rows.push_back({{"knot", knots[i].name}, {"counts", prof.counts[i]}});
                out << json{{"quandles", quandle_args},
                            {"knots", rows},
                            {"count_classes", named(prof.count_classes)},
                            {"nontrivial_classes", named(prof.nontrivial_classes)}}
                           .dump(2)
                    << "\n";
                return;
            }
            if (format != "csv") throw DomainError("unknown format '" + format + "' (csv, json)");
            out << "knot";
            for (const auto& a : quandle_args) out << ",\"" << a << "\"";
            out << "\n";
            for (std::size_t i = 0; i < knots.size(); ++i) {
                out << knots[i].name;
                for (auto c : prof.counts[i]) out << "," << c;
                out << "\n";
            }
            for (const auto& [title, classes] :
                 {std::pair{"# count classes:", named(prof.count_classes)},
                  std::pair{"# nontrivial-coloring classes:", named(prof.nontrivial_classes)}}) {
                out << title;
                for (const auto& c : classes) {
                    out << " {";
                    for (std::size_t k = 0; k < c.size(); ++k) out << (k ? ", " : "") << c[k];
                    out << "}";
                }
                out << "\n";
            }
        };
    });

    // count
    auto* count = app.add_subcommand("count", "Class counting");
    count->require_subcommand(1);
    int max_n = 16, classify_max = 16;
    auto* c_classes = count->add_subcommand("classes", "N(n) against classification and the published list");
    c_classes->add_option("--max", max_n, "Largest n")->required()->check(CLI::PositiveNumber);
    c_classes->add_option("--classify-max", classify_max, "Largest n to classify by brute force");
    c_classes->callback([&] {
        action = [&] {
            const auto report = crosscheck(max_n, classify_max, opt.limits);
            json rows = json::array();
            for (const auto& r : report.rows) {
                json row{{"order", 3 * r.n}, {"n", r.n}, {"formula", r.formula}};
                row["classified"] = r.classified ? json(r.classified) : json(nullptr);
                row["published"] = r.published ? json(r.published) : json(nullptr);
                row["status"] = r.ok ? "PASS" : "FAIL";
                rows.push_back(row);
            }
            if (opt.json) {
                out << json{{"rows", rows}, {"discrepancies", report.discrepancies}}.dump(2) << "\n";
            } else {
                out << "order  n  N(n)  classified  published  status\n";
                for (const auto& r : report.rows)
                    out << 3 * r.n << "  " << r.n << "  " << r.formula << "  "
                        << (r.classified ? std::to_string(r.classified) : "-") << "  "
                        << (r.published ? std::to_string(r.published) : "-") << "  " << (r.ok ? "PASS" : "FAIL")
                        << "\n";
            }
            if (!report.ok()) throw DomainError("class counts disagree");
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (action) action();
        return 0;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gq
