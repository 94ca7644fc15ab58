#include "coxstar/cli.hpp"

#include <CLI11.hpp>
#include <fstream>

#include "coxstar/demazure.hpp"
#include "coxstar/facemonoid.hpp"
#include "coxstar/oracle.hpp"
#include "coxstar/table_io.hpp"

namespace coxstar {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitInternalAlarm = 3;

CheckSet parse_checks(const std::string& name) {
    if (name == "all") return CheckSet::all;
    if (name == "theorem") return CheckSet::theorem;
    if (name == "lemmas") return CheckSet::lemmas;
    if (name == "closedform") return CheckSet::closedform;
    if (name == "inductive") return CheckSet::inductive;
    throw ParseError("unknown check set '" + name + "'");
}

void print_report(const VerificationReport& rep, std::ostream& out) {
    out << "type " << rep.type_name << ": " << rep.pairs << " subset pairs";
    if (rep.assoc_triples > 0)
        out << ", " << rep.assoc_triples
            << (rep.assoc_exhaustive ? " triples (exhaustive)" : " triples (sampled)");
    out << "\n";
    if (rep.ok()) {
        out << "result: PASS\n";
        return;
    }
    std::size_t shown = 0;
    for (const auto& f : rep.failures) {
        if (shown++ == 50) {
            out << "  ... and " << rep.failures.size() - 50 << " more\n";
            break;
        }
        out << "  " << f.check << " failed: " << f.detail << "\n";
    }
    out << "result: FAIL (" << rep.failures.size() << " failures)\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Demazure product, downward operation, and the face monoid of subsets of "
                 "the node set, for finite Coxeter groups"};
    app.name("coxstar");
    app.require_subcommand(1);

    std::string type, word_x, word_y, subset, subset1, subset2;
    std::string format = "json", out_path, checks = "all";
    std::uint64_t guard = 50000;

    auto* c_table = app.add_subcommand("table", "full star table with verification status");
    c_table->add_option("TYPE", type)->required();
    c_table->add_option("--format", format, "json, csv, or md");
    c_table->add_option("--out", out_path, "write to a file instead of standard output");

    auto* c_star = app.add_subcommand("star", "Demazure product of two words");
    c_star->add_option("TYPE", type)->required();
    c_star->add_option("--x", word_x)->required();
    c_star->add_option("--y", word_y)->required();

    auto* c_tri = app.add_subcommand("tri", "downward operation x |> y");
    c_tri->add_option("TYPE", type)->required();
    c_tri->add_option("--x", word_x)->required();
    c_tri->add_option("--y", word_y)->required();

    auto* c_longest = app.add_subcommand("longest", "longest element of a parabolic subgroup");
    c_longest->add_option("TYPE", type)->required();
    c_longest->add_option("--subset", subset)->required();

    auto* c_starsets = app.add_subcommand("starsets", "J1 star J2 on subsets of the node set");
    c_starsets->add_option("TYPE", type)->required();
    c_starsets->add_option("--j1", subset1)->required();
    c_starsets->add_option("--j2", subset2)->required();

    auto* c_verify = app.add_subcommand("verify", "run the verification suite over all pairs");
    c_verify->add_option("TYPE", type)->required();
    c_verify->add_option("--checks", checks, "all, theorem, lemmas, closedform, or inductive");

    auto* c_oracle = app.add_subcommand("oracle-check", "brute-force cross check on a small group");
    c_oracle->add_option("TYPE", type)->required();
    c_oracle->add_option("--guard", guard, "largest group order to enumerate");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const Group g(parse_type(type));
        if (c_table->parsed()) {
            const StarTable t = full_table(g);
            const std::string body = emit_table(t, parse_format(format));
            if (out_path.empty()) {
                out << body;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open '" + out_path + "' for writing");
                f << body;
            }
        } else if (c_star->parsed() || c_tri->parsed()) {
            const Element x = g.from_word(parse_word(word_x, g.rank()));
            const Element y = g.from_word(parse_word(word_y, g.rank()));
            const Element z = c_star->parsed() ? star(x, y) : down(x, y);
            out << word_str(canonical_word(z)) << "\n";
        } else if (c_longest->parsed()) {
            const Element z = longest(g, NodeSet::parse(subset, g.rank()));
            out << word_str(canonical_word(z)) << "\n" << z.length() << "\n";
        } else if (c_starsets->parsed()) {
            const NodeSet j3 = star_sets(g, NodeSet::parse(subset1, g.rank()),
                                         NodeSet::parse(subset2, g.rank()));
            out << j3.str() << "\n";
        } else if (c_verify->parsed()) {
            const VerificationReport rep = verify(g, parse_checks(checks));
            print_report(rep, out);
            if (rep.internal_mismatch) return kExitInternalAlarm;
            if (!rep.ok()) return kExitVerifyFailed;
        } else if (c_oracle->parsed()) {
            const CrossCheckReport rep = cross_check(g, guard);
            out << "type " << rep.type_name << ": " << rep.group_size << " elements, "
                << rep.bruhat_pairs << " bruhat pairs, " << rep.star_pairs << " star pairs, "
                << rep.down_pairs << " down pairs\n";
            if (rep.ok()) {
                out << "result: PASS\n";
            } else {
                for (const auto& m : rep.mismatches) out << "  " << m << "\n";
                out << "result: FAIL (" << rep.mismatches.size() << " mismatches)\n";
                return kExitVerifyFailed;
            }
        }
        return kExitOk;
    } catch (const InternalMismatch& e) {
        err << "internal mismatch: " << e.what() << "\n";
        return kExitInternalAlarm;
    } catch (const NotALongestElement& e) {
        err << "closure violation: " << e.what() << "\n";
        return kExitInternalAlarm;
    } catch (const NoUniqueExtremum& e) {
        err << "uniqueness violation: " << e.what() << "\n";
        return kExitInternalAlarm;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace coxstar
