#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcp/dot.hpp"
#include "lcp/lattice.hpp"
#include "lcp/oracle.hpp"
#include "lcp/text.hpp"

using nlohmann::json;

namespace {

struct Options {
    std::string input;
    bool as_json = false;
    bool ascii = false;
    int limit = lcp::kDefaultSizeCap;
};

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
        s.replace(pos, from.size(), to);
    return s;
}

std::string asciify(std::string s) {
    s = replace_all(std::move(s), "λ", "L");
    s = replace_all(std::move(s), "·", "*");
    s = replace_all(std::move(s), "M̄", "Mbar");
    s = replace_all(std::move(s), "Π", "Pi");
    s = replace_all(std::move(s), "μ", "mu");
    s = replace_all(std::move(s), "0̂", "0");
    return s;
}

json set_json(const lcp::Poset& p, lcp::Mask m) {
    json a = json::array();
    for (int i = 0; i < p.size(); ++i)
        if (lcp::has(m, i)) a.push_back(p.label(i));
    return a;
}

void cmd_info(const Options& opt, std::ostream& out) {
    auto p = lcp::parse_poset_file(opt.input);
    lcp::Mask m = p->maximal_elements();
    lcp::Mask mbar = lcp::mlb_closure(*p, 0);
    auto greatest = p->greatest();
    if (opt.as_json) {
        json j;
        j["elements"] = p->labels();
        j["cover_count"] = p->covers().size();
        j["greatest"] = greatest ? json(p->label(*greatest)) : json(nullptr);
        j["maximal"] = set_json(*p, m);
        j["mlb_closure_of_maximal"] = set_json(*p, mbar);
        out << j.dump(2) << "\n";
        return;
    }
    out << "poset: " << p->size() << " elements, " << p->covers().size() << " cover pairs\n";
    out << "greatest: " << (greatest ? p->label(*greatest) : "none") << "\n";
    out << "M = " << p->set_to_string(m) << "\n";
    out << "M̄ = " << p->set_to_string(mbar) << "\n";
}

void cmd_closures(const Options& opt, bool with_oracle, std::ostream& out) {
    auto p = lcp::parse_poset_file(opt.input);
    auto l = lcp::LcLattice::build(p, opt.limit);
    if (with_oracle) {
        auto naive = lcp::oracle::enumerate_closures_naive(p);
        std::vector<lcp::Mask> a, b;
        for (const auto& h : naive) a.push_back(h.closed_set());
        for (int i = 0; i < l.node_count(); ++i) b.push_back(l.closed_set(i));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw lcp::InvariantViolation("naive closure enumeration disagrees with lattice build");
    }
    if (opt.as_json) {
        json j;
        j["count"] = l.node_count();
        j["closures"] = json::array();
        for (int i = 0; i < l.node_count(); ++i)
            j["closures"].push_back(set_json(*p, l.closed_set(i)));
        if (with_oracle) j["oracle_agreement"] = true;
        out << j.dump(2) << "\n";
        return;
    }
    out << "LC(P): " << l.node_count() << " closures\n";
    for (int i = 0; i < l.node_count(); ++i)
        out << "closed: " << p->set_to_string(l.closed_set(i)) << "\n";
    if (with_oracle) out << "oracle agreement: OK\n";
}

void cmd_lattice(const Options& opt, std::ostream& out) {
    auto p = lcp::parse_poset_file(opt.input);
    auto l = lcp::LcLattice::build(p, opt.limit);
    auto atoms = l.atoms();
    if (opt.as_json) {
        json j;
        j["nodes"] = l.node_count();
        j["edges"] = l.hasse().size();
        j["rank_top"] = l.rank(l.top());
        j["atoms"] = json::array();
        for (int a : atoms) j["atoms"].push_back(set_json(*p, l.closed_set(a)));
        out << j.dump(2) << "\n";
        return;
    }
    out << "nodes: " << l.node_count() << "\n";
    out << "edges: " << l.hasse().size() << "\n";
    out << "rank(top): " << l.rank(l.top()) << "\n";
    out << "atoms: " << atoms.size() << "\n";
    for (int a : atoms) out << "  closed: " << p->set_to_string(l.closed_set(a)) << "\n";
}

void cmd_charpoly(const Options& opt, std::ostream& out) {
    auto p = lcp::parse_poset_file(opt.input);
    auto l = lcp::LcLattice::build(p, opt.limit);
    lcp::Polynomial def = l.characteristic_polynomial();
    lcp::Polynomial closed = lcp::closed_form_char_poly(*p);
    bool agree = def == closed;
    if (opt.as_json) {
        json j;
        j["definitional"] = def.coefficients();
        j["closed_form"] = closed.coefficients();
        j["factored"] = def.to_factored_string(!opt.ascii);
        j["verdict"] = agree ? "AGREE" : "DISAGREE";
        out << j.dump(2) << "\n";
    } else {
        out << "definitional: " << def.to_factored_string() << "\n";
        out << "closed form:  " << closed.to_factored_string() << "\n";
        out << "expanded: " << def.to_string() << "\n";
        out << "coefficients (low to high):";
        for (long long c : def.coefficients()) out << " " << c;
        out << "\nverdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    if (!agree)
        throw lcp::InvariantViolation("definitional and closed-form characteristic polynomials disagree");
}

void cmd_modular(const Options& opt, const std::string& closure_path, std::ostream& out) {
    auto p = lcp::parse_poset_file(opt.input);
    auto l = lcp::LcLattice::build(p, opt.limit);
    bool has_top = p->greatest().has_value();

    auto modular_flag = [&](int i) {
        bool brute = lcp::is_modular_bruteforce(l, i);
        if (has_top) {
            bool cover = lcp::has_cover_property(l.node(i));
            if (cover != brute)
                throw lcp::InvariantViolation(
                    "cover property and brute-force modularity disagree at closed set " +
                    p->set_to_string(l.closed_set(i)));
        }
        return brute;
    };

    if (!closure_path.empty()) {
        auto h = lcp::parse_closure_file(closure_path, p);
        auto node = l.node_of(h.closed_set());
        if (!node) throw lcp::InvariantViolation("closure not found in LC(P)");
        bool m = modular_flag(*node);
        if (opt.as_json) {
            json j;
            j["closed"] = set_json(*p, h.closed_set());
            j["modular"] = m;
            out << j.dump(2) << "\n";
        } else {
            out << "closed " << p->set_to_string(h.closed_set()) << ": "
                << (m ? "modular" : "not modular") << "\n";
        }
        return;
    }

    if (opt.as_json) {
        json j;
        j["method"] = has_top ? "cover-property, brute-force cross-checked" : "brute force (no greatest element)";
        j["nodes"] = json::array();
        for (int i = 0; i < l.node_count(); ++i) {
            json n;
            n["closed"] = set_json(*p, l.closed_set(i));
            n["modular"] = modular_flag(i);
            j["nodes"].push_back(n);
        }
        out << j.dump(2) << "\n";
        return;
    }
    if (!has_top)
        out << "note: no greatest element, using brute force\n";
    for (int i = 0; i < l.node_count(); ++i)
        out << "closed " << p->set_to_string(l.closed_set(i)) << ": "
            << (modular_flag(i) ? "modular" : "not modular") << "\n";
}

void cmd_mchain(const Options& opt, std::ostream& out) {
    auto p = lcp::parse_poset_file(opt.input);
    auto chain = lcp::m_chain(p);
    if (opt.as_json) {
        json j;
        j["length"] = chain.size();
        j["chain"] = json::array();
        for (const auto& h : chain) j["chain"].push_back(set_json(*p, h.closed_set()));
        out << j.dump(2) << "\n";
        return;
    }
    out << "M-chain (" << chain.size() << " nodes, bottom to top):\n";
    for (const auto& h : chain) out << "  closed: " << p->set_to_string(h.closed_set()) << "\n";
}

void cmd_convexity(const Options& opt, std::ostream& out) {
    auto p = lcp::parse_poset_file(opt.input);
    auto anti = lcp::check_anti_exchange(*p, opt.limit);
    auto l = lcp::LcLattice::build(p, opt.limit);
    auto jd = lcp::check_join_distributive(l);
    auto sm = lcp::check_semimodular(l);
    if (opt.as_json) {
        json j;
        j["anti_exchange"] = anti.ok;
        j["join_distributive"] = jd.ok;
        j["semimodular"] = sm.ok;
        out << j.dump(2) << "\n";
    } else {
        out << "anti-exchange: " << (anti.ok ? "OK" : "FAIL") << "\n";
        out << "join-distributive: " << (jd.ok ? "OK" : "FAIL") << "\n";
        out << "semimodular: " << (sm.ok ? "OK" : "FAIL") << "\n";
    }
    if (!anti.ok) {
        const auto& w = *anti.witness;
        throw lcp::InvariantViolation("anti-exchange failed at A=" + p->set_to_string(w.closed_set) +
                                      ", x=" + p->label(w.x) + ", y=" + p->label(w.y));
    }
    if (!jd.ok) throw lcp::InvariantViolation("join-distributivity failed: " + jd.witness);
    if (!sm.ok) throw lcp::InvariantViolation("semimodularity failed: " + sm.witness);
}

void cmd_sublattice(const Options& opt, std::ostream& out) {
    auto p = lcp::parse_poset_file(opt.input);
    auto r = lcp::check_sublattice_of_partitions(p, opt.limit);
    if (opt.as_json) {
        json j;
        j["sublattice"] = r.ok();
        j["via_lattice_test"] = r.via_lattice_test;
        j["via_partition_meet"] = r.via_partition_meet;
        j["witness"] = r.witness;
        out << j.dump(2) << "\n";
    } else if (r.ok()) {
        out << "LC(P) is a sublattice of Π(P): 0̂+P is a lattice\n";
    } else {
        out << "NOT a sublattice of Π(P): 0̂+P is not a lattice (witness: " << r.witness
            << ")\n";
    }
    if (!r.agree())
        throw lcp::InvariantViolation("sublattice routes disagree: lattice test says " +
                                      std::to_string(r.via_lattice_test) + ", partition meets say " +
                                      std::to_string(r.via_partition_meet));
}

void cmd_dot(const Options& opt, bool lattice, bool with_mu, std::ostream& out) {
    auto p = lcp::parse_poset_file(opt.input);
    if (lattice) {
        auto l = lcp::LcLattice::build(p, opt.limit);
        lcp::emit_lattice_dot(out, l, with_mu);
    } else {
        lcp::emit_poset_dot(out, *p);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice of closure relations on a finite poset"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("CLOSURE_LATTICE_SIZE_LIMIT")) opt.limit = std::atoi(env);
    app.add_flag("--json", opt.as_json, "machine-readable output");
    app.add_flag("--ascii", opt.ascii, "normalize unicode in human output");
    app.add_option("--limit", opt.limit, "enumeration size cap");

    bool with_oracle = false, dot_lattice = false, dot_mu = false;
    std::string closure_path;

    auto add_input = [&](CLI::App* sub) {
        sub->fallthrough();  // let --json/--ascii/--limit follow the subcommand
        sub->add_option("input", opt.input, "poset file")->required();
    };
    auto* info = app.add_subcommand("info", "poset summary: sizes, M, M̄");
    add_input(info);
    auto* closures = app.add_subcommand("closures", "list all closure relations");
    add_input(closures);
    closures->add_flag("--oracle", with_oracle, "cross-check against naive enumeration");
    auto* lattice = app.add_subcommand("lattice", "LC(P) node/edge counts, rank, atoms");
    add_input(lattice);
    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial, both routes");
    add_input(charpoly);
    auto* modular = app.add_subcommand("modular", "modular elements of LC(P)");
    add_input(modular);
    modular->add_option("--closure", closure_path, "check a single closure (text form)");
    auto* mchain = app.add_subcommand("mchain", "maximal chain of modular closures");
    add_input(mchain);
    auto* convexity = app.add_subcommand("convexity", "anti-exchange, join-distributive, semimodular");
    add_input(convexity);
    auto* sublattice = app.add_subcommand("sublattice", "is LC(P) a sublattice of Π(P)?");
    add_input(sublattice);
    auto* dot = app.add_subcommand("dot", "DOT Hasse diagram of P or LC(P)");
    add_input(dot);
    dot->add_flag("--lattice", dot_lattice, "emit LC(P) instead of P");
    dot->add_flag("--mu", dot_mu, "annotate nodes with μ(0̂, ·)");

    CLI11_PARSE(app, argc, argv);

    std::ostringstream out;
    try {
        if (info->parsed()) cmd_info(opt, out);
        else if (closures->parsed()) cmd_closures(opt, with_oracle, out);
        else if (lattice->parsed()) cmd_lattice(opt, out);
        else if (charpoly->parsed()) cmd_charpoly(opt, out);
        else if (modular->parsed()) cmd_modular(opt, closure_path, out);
        else if (mchain->parsed()) cmd_mchain(opt, out);
        else if (convexity->parsed()) cmd_convexity(opt, out);
        else if (sublattice->parsed()) cmd_sublattice(opt, out);
        else if (dot->parsed()) cmd_dot(opt, dot_lattice, dot_mu, out);
    } catch (const lcp::SizeLimit& e) {
        std::cout << (opt.ascii ? asciify(out.str()) : out.str());
        std::cerr << "size limit: " << e.what() << "\n";
        return 2;
    } catch (const lcp::InvariantViolation& e) {
        std::cout << (opt.ascii ? asciify(out.str()) : out.str());
        std::cerr << "invariant violation: " << (opt.ascii ? asciify(e.what()) : e.what()) << "\n";
        return 3;
    } catch (const lcp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << (opt.ascii ? asciify(out.str()) : out.str());
    return 0;
}
