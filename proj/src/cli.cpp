#include "reslat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "reslat/algebra.hpp"
#include "reslat/canonical.hpp"
#include "reslat/constructions.hpp"
#include "reslat/enumeration.hpp"
#include "reslat/io.hpp"
#include "reslat/order.hpp"
#include "reslat/report.hpp"
#include "reslat/residuated_laws.hpp"
#include "reslat/semiring_laws.hpp"

namespace reslat::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitLawFailure = 2;
constexpr int kExitResourceLimit = 3;

std::optional<Algebra> load_algebra(const std::string& path, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot open file: " << path << "\n";
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_algebra(buffer.str());
    } catch (const parse_error& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    } catch (const algebra_error& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

std::optional<EnumOptions> options_from_env(std::ostream& err) {
    EnumOptions options;
    if (const char* raw = std::getenv("RESLAT_MAX_SIZE")) {
        try {
            const int value = std::stoi(raw);
            if (value < 1) throw std::invalid_argument("below 1");
            options.size_guard = value;
        } catch (const std::exception&) {
            err << "error: RESLAT_MAX_SIZE must be a positive integer, got '" << raw << "'\n";
            return std::nullopt;
        }
    }
    return options;
}

// Laws that expand to several report entries.
const std::vector<std::string>* composite_parts(Kind kind, const std::string& law) {
    static const std::vector<std::string> dnl_parts = {"dnl_i", "dnl_ii", "dnl_iii"};
    static const std::vector<std::string> boolean_parts = {"lattice_distributive",
                                                           "complement_join",
                                                           "complement_meet"};
    static const std::vector<std::string> mv_parts = {"oplus_assoc",    "oplus_comm",
                                                      "oplus_zero",     "oplus_top",
                                                      "neg_involution", "mv_exchange"};
    if (kind == Kind::semiring && law == "dnl") return &dnl_parts;
    if (kind == Kind::reslat && law == "boolean") return &boolean_parts;
    if (kind == Kind::mv && law == "mv") return &mv_parts;
    return nullptr;
}

bool law_known(Kind kind, const std::string& law) {
    if (composite_parts(kind, law)) return true;
    const auto names = known_laws(kind);
    return std::find(names.begin(), names.end(), law) != names.end();
}

int run_check(const Algebra& alg, const std::vector<std::string>& laws, std::ostream& out,
              std::ostream& err) {
    for (const std::string& law : laws) {
        if (!law_known(alg.kind(), law)) {
            err << "error: unknown law '" << law << "' for kind '" << kind_name(alg.kind())
                << "'\n";
            return kExitUsage;
        }
    }

    LawReport report;
    switch (alg.kind()) {
        case Kind::semiring: {
            const SemiringAlg& s = alg.semiring();
            report = check_semiring(s);
            report.append(check_variety_flags(s).report());
            try {
                report.add(check_isotone(s));
            } catch (const law_violation& e) {
                err << "note: isotone skipped: " << e.what() << "\n";
            }
            break;
        }
        case Kind::reslat: {
            const ReslatAlg& r = alg.reslat();
            report = check_residuated(r);
            if (report.passed()) {
                report.append(check_negation_laws(r));
            } else {
                err << "note: negation laws skipped (base residuated-lattice laws failed)\n";
            }
            break;
        }
        case Kind::mv:
            report = check_mv(alg.mv());
            break;
    }

    for (const std::string& law : laws) {
        if (const auto* parts = composite_parts(alg.kind(), law)) {
            for (const std::string& part : *parts) report.add(eval_law(part, alg));
        } else {
            report.add(eval_law(law, alg));
        }
    }

    out << "ALGEBRA " << alg.name() << " kind=" << kind_name(alg.kind())
        << " size=" << alg.carrier().size() << "\n";
    out << render_report(report);
    return report.passed() ? kExitOk : kExitLawFailure;
}

int run_convert(const Algebra& alg, const std::string& target, std::ostream& out,
                std::ostream& err) {
    try {
        std::optional<Algebra> converted;
        if (target == "semiring") {
            if (alg.kind() == Kind::reslat) {
                converted = Algebra(alg.name(), to_semiring(alg.reslat()));
            } else if (alg.kind() == Kind::mv) {
                converted = Algebra(alg.name(), to_semiring(mv_to_reslat(alg.mv())));
            }
        } else if (target == "reslat") {
            if (alg.kind() == Kind::semiring) {
                converted = Algebra(alg.name(), to_residuated_lattice(alg.semiring()));
            } else if (alg.kind() == Kind::mv) {
                converted = Algebra(alg.name(), mv_to_reslat(alg.mv()));
            }
        } else if (target == "dnl-reslat") {
            if (alg.kind() == Kind::semiring) {
                converted = Algebra(alg.name(), dnl_to_residuated_lattice(alg.semiring()));
            }
        }
        if (!converted) {
            err << "error: no conversion from kind '" << kind_name(alg.kind()) << "' to '"
                << target << "'\n";
            return kExitUsage;
        }
        out << emit_algebra(*converted);
        return kExitOk;
    } catch (const law_violation& e) {
        err << "error: " << e.what() << "\n";
        return kExitLawFailure;
    }
}

int run_roundtrip(const Algebra& alg, std::ostream& out, std::ostream& err) {
    if (alg.kind() == Kind::mv) {
        err << "error: roundtrip requires kind semiring or reslat; convert the input first\n";
        return kExitUsage;
    }
    LawReport report = roundtrip(alg);
    out << render_report(report);
    out << (report.passed() ? "ROUNDTRIP PASS\n" : "ROUNDTRIP FAIL\n");
    return report.passed() ? kExitOk : kExitLawFailure;
}

int run_enumerate(const std::string& kind_text, int size,
                  const std::vector<std::string>& filters, bool count_only, std::ostream& out,
                  std::ostream& err) {
    EnumKind kind;
    try {
        kind = enum_kind_from_name(kind_text);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const Kind algebra_kind = (kind == EnumKind::reslat) ? Kind::reslat : Kind::semiring;
    for (const std::string& law : filters) {
        if (!law_known(algebra_kind, law)) {
            err << "error: unknown law '" << law << "' for kind '" << kind_name(algebra_kind)
                << "'\n";
            return kExitUsage;
        }
    }

    const auto options = options_from_env(err);
    if (!options) return kExitUsage;

    std::vector<Algebra> stream;
    try {
        stream = enumerate_algebras(kind, size, *options);
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<const Algebra*> kept;
    for (const Algebra& alg : stream) {
        bool pass = true;
        for (const std::string& law : filters) {
            if (const auto* parts = composite_parts(algebra_kind, law)) {
                for (const std::string& part : *parts) {
                    if (!eval_law(part, alg).pass) {
                        pass = false;
                        break;
                    }
                }
            } else if (!eval_law(law, alg).pass) {
                pass = false;
            }
            if (!pass) break;
        }
        if (pass) kept.push_back(&alg);
    }

    if (count_only) {
        out << "COUNT " << size << " " << kept.size() << "\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (i) out << "\n";
        out << emit_algebra(*kept[i]);
    }
    return kExitOk;
}

int run_sweep(const std::string& id, int max_size, std::ostream& out, std::ostream& err) {
    const auto options = options_from_env(err);
    if (!options) return kExitUsage;

    SweepReport report;
    try {
        report = sweep_verify(id, max_size, *options);
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    for (const SweepSizeStats& stats : report.per_size) {
        out << "SWEEP " << report.id << " size=" << stats.size
            << " instances=" << stats.instances << " failures=" << stats.failures << "\n";
    }
    for (const SweepFailure& failure : report.failures) {
        out << "FAILURE " << failure.algebra_name << " " << failure.law
            << " witness=" << render_witness(failure.witness) << "\n";
    }
    return report.passed() ? kExitOk : kExitLawFailure;
}

int run_find(const std::string& kind_text, const std::string& law, int max_size,
             std::ostream& out, std::ostream& err) {
    const auto options = options_from_env(err);
    if (!options) return kExitUsage;

    std::optional<std::pair<Algebra, LawEntry>> found;
    try {
        EnumKind kind = enum_kind_from_name(kind_text);
        found = find_counterexample(kind, law, max_size, *options);
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!found) {
        out << "NONE max-size=" << max_size << " law=" << law << "\n";
        return kExitOk;
    }
    out << emit_algebra(found->first);
    out << "FOUND size=" << found->first.carrier().size() << " name=" << found->first.name()
        << " law=" << found->second.name << " witness=" << render_witness(found->second.witness)
        << "\n";
    return kExitLawFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite semirings, residuated lattices, and the passage between them"};
    app.name("reslat");
    app.require_subcommand(1);

    std::string check_file;
    std::vector<std::string> check_laws;
    CLI::App* check_cmd = app.add_subcommand("check", "run a law suite against one algebra");
    check_cmd->add_option("file", check_file, "algebra file")->required();
    check_cmd->add_option("--law", check_laws, "extra law to evaluate (repeatable)");

    std::string convert_file;
    std::string convert_target;
    CLI::App* convert_cmd =
        app.add_subcommand("convert", "construct the counterpart structure");
    convert_cmd->add_option("file", convert_file, "algebra file")->required();
    convert_cmd->add_option("--to", convert_target, "target kind")
        ->required()
        ->check(CLI::IsMember({"semiring", "reslat", "dnl-reslat"}));

    std::string roundtrip_file;
    CLI::App* roundtrip_cmd =
        app.add_subcommand("roundtrip", "convert there and back, then compare tables");
    roundtrip_cmd->add_option("file", roundtrip_file, "algebra file")->required();

    std::string enum_kind;
    int enum_size = 0;
    std::vector<std::string> enum_filters;
    bool enum_count_only = false;
    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "stream all instances of one size, up to isomorphism");
    enum_cmd->add_option("--kind", enum_kind, "instance class")->required();
    enum_cmd->add_option("--size", enum_size, "carrier size")->required();
    enum_cmd->add_option("--filter", enum_filters, "keep only instances passing this law");
    enum_cmd->add_flag("--count-only", enum_count_only, "print a count line instead of bodies");

    std::string sweep_id;
    int sweep_max = 0;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "verify one structure theorem over all small instances");
    sweep_cmd->add_option("--theorem", sweep_id, "sweep id")->required();
    sweep_cmd->add_option("--max-size", sweep_max, "largest carrier size")->required();

    std::string find_kind;
    std::string find_law;
    int find_max = 0;
    CLI::App* find_cmd =
        app.add_subcommand("find", "search enumeration order for the first law failure");
    find_cmd->add_option("--kind", find_kind, "instance class")->required();
    find_cmd->add_option("--law", find_law, "law to falsify")->required();
    find_cmd->add_option("--max-size", find_max, "largest carrier size")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check_cmd->parsed()) {
            const auto alg = load_algebra(check_file, err);
            if (!alg) return kExitUsage;
            return run_check(*alg, check_laws, out, err);
        }
        if (convert_cmd->parsed()) {
            const auto alg = load_algebra(convert_file, err);
            if (!alg) return kExitUsage;
            return run_convert(*alg, convert_target, out, err);
        }
        if (roundtrip_cmd->parsed()) {
            const auto alg = load_algebra(roundtrip_file, err);
            if (!alg) return kExitUsage;
            return run_roundtrip(*alg, out, err);
        }
        if (enum_cmd->parsed())
            return run_enumerate(enum_kind, enum_size, enum_filters, enum_count_only, out, err);
        if (sweep_cmd->parsed()) return run_sweep(sweep_id, sweep_max, out, err);
        if (find_cmd->parsed()) return run_find(find_kind, find_law, find_max, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace reslat::cli
