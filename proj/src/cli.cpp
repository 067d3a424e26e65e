#include "qlogic/cli.hpp"

#include "qlogic/classical.hpp"
#include "qlogic/error.hpp"
#include "qlogic/identity.hpp"
#include "qlogic/process.hpp"
#include "qlogic/propositions.hpp"

#include "CLI11.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qlogic::cli {

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// SHA-256 over the arguments and the contents of every input file, each item
// followed by a NUL separator.
class InputDigest {
public:
    InputDigest() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) { EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr); }

    void add(std::string_view data) {
        EVP_DigestUpdate(ctx_.get(), data.data(), data.size());
        EVP_DigestUpdate(ctx_.get(), "", 1);
    }

    std::string hex() {
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        EVP_DigestFinal_ex(ctx_.get(), md, &len);
        std::ostringstream os;
        os << "sha256:";
        for (unsigned int k = 0; k < len; ++k)
            os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[k]);
        return os.str();
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

std::string read_file(const std::string& path, InputDigest& digest) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    digest.add(buf.str());
    return buf.str();
}

nlohmann::json read_json(const std::string& path, InputDigest& digest) {
    const auto text = read_file(path, digest);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

nlohmann::json demo_spin() {
    const Demo demo = spin_demo();
    const auto histories = run(demo.process);
    return report_json(demo, histories);
}

nlohmann::json demo_hatch() {
    const Demo demo = hatch_demo();
    const auto histories = run(demo.process);
    auto j = report_json(demo, histories);
    j["sample_space"] = sample_space(demo.process);
    return j;
}

nlohmann::json demo_two_state() {
    const auto real = two_state_demo(ScalarField::RationalReal);
    const auto gaussian = two_state_demo(ScalarField::GaussianRational);
    const bool same = real.left == gaussian.left && real.right == gaussian.right &&
                      real.distributive == gaussian.distributive;
    auto j = to_json(real);
    j["fields"] = {{"real", to_json(real)}, {"gaussian", to_json(gaussian)}};
    j["field_insensitive"] = same;
    return j;
}

Subspace load_subspace(const std::string& path, InputDigest& digest) {
    return subspace_from_json(read_json(path, digest));
}

Vector load_state(const std::string& path, InputDigest& digest) {
    const auto j = read_json(path, digest);
    if (j.is_object() && j.contains("state"))
        return vector_from_json(j.at("state"));
    if (j.is_object() && j.contains("amplitude"))
        return classical_state_from_json(j).state.amplitude();
    return vector_from_json(j);
}

void render(const nlohmann::json& j, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto simple_array = [](const nlohmann::json& v) {
        return v.is_array() && std::none_of(v.begin(), v.end(), [](const auto& e) {
                   return e.is_object() || (e.is_array() && !e.empty() && e.front().is_array());
               });
    };
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !simple_array(value))) {
                os << pad << key << ":\n";
                render(value, indent + 1, os);
            } else if (value.is_array()) {
                os << pad << key << ": " << value.dump() << "\n";
            } else {
                os << pad << key << ": " << scalar(value) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || (value.is_array() && !simple_array(value))) {
                os << pad << "-\n";
                render(value, indent + 1, os);
            } else {
                os << pad << "- " << (value.is_array() ? value.dump() : scalar(value)) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

} // namespace

std::string render_text(const nlohmann::json& report) {
    std::ostringstream os;
    render(report, 0, os);
    return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact subspace-lattice and quantum-logic workbench", "qlogic"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed, "Seed for randomized searches");

    auto* demo = app.add_subcommand("demo", "Run a worked example");
    std::string demo_name;
    demo->add_option("name", demo_name)->required()->check(CLI::IsMember({"spin", "hatch", "two-state"}));

    auto* lattice = app.add_subcommand("lattice", "Lattice operations on subspace files");
    std::string lattice_op;
    std::vector<std::string> lattice_files;
    lattice->add_option("op", lattice_op)->required()->check(CLI::IsMember({"meet", "join", "ortho", "leq"}));
    lattice->add_option("files", lattice_files)->required()->expected(1, 2);

    auto* check_cmd = app.add_subcommand("check", "Search for counterexamples to an identity");
    std::string statement_text;
    std::string statement_file;
    std::string structure = "subspace";
    std::string field = "gaussian";
    std::size_t dim = 3;
    std::uint64_t trials = 1000;
    auto* stmt_opt = check_cmd->add_option("statement", statement_text, "Identity, e.g. \"x & y <= x\"");
    auto* file_opt = check_cmd->add_option("--file", statement_file, "One statement per line, '#' comments");
    stmt_opt->excludes(file_opt);
    check_cmd->add_option("--structure", structure)->check(CLI::IsMember({"subspace", "boolean"}));
    check_cmd->add_option("--dim", dim, "Space dimension, or universe size for boolean")
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    check_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
    check_cmd->add_option("--field", field)->check(CLI::IsMember({"real", "gaussian"}));

    auto* props = app.add_subcommand("props", "Evaluate propositions");
    auto* props_eval = props->add_subcommand("eval", "Evaluate a proposition file on a state file");
    props->require_subcommand(1);
    std::string prop_file, state_file;
    props_eval->add_option("prop-file", prop_file)->required();
    props_eval->add_option("state-file", state_file)->required();

    auto* process = app.add_subcommand("process", "Branching experiments");
    auto* process_run = process->add_subcommand("run", "Enumerate the histories of a process file");
    process->require_subcommand(1);
    std::string process_file;
    process_run->add_option("process-file", process_file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "qlogic: " << e.what() << "\n";
        return kUsage;
    }

    InputDigest digest;
    std::string command;
    for (const auto& a : args) {
        digest.add(a);
        command += (command.empty() ? "" : " ") + a;
    }

    int code = kOk;
    nlohmann::json results;
    try {
        if (*demo) {
            if (demo_name == "spin")
                results = demo_spin();
            else if (demo_name == "hatch")
                results = demo_hatch();
            else
                results = demo_two_state();
        } else if (*lattice) {
            const bool binary = lattice_op != "ortho";
            if (lattice_files.size() != (binary ? 2u : 1u))
                throw UsageError("lattice " + lattice_op + " takes " + (binary ? "two files" : "one file"));
            const Subspace a = load_subspace(lattice_files[0], digest);
            if (lattice_op == "ortho") {
                results = {{"result", to_json(ortho(a))}};
            } else {
                const Subspace b = load_subspace(lattice_files[1], digest);
                if (lattice_op == "meet")
                    results = {{"result", to_json(meet(a, b))}};
                else if (lattice_op == "join")
                    results = {{"result", to_json(join(a, b))}};
                else
                    results = {{"leq", leq(a, b)}};
            }
        } else if (*check_cmd) {
            std::vector<IdentityStatement> statements;
            if (!statement_file.empty())
                statements = parse_statements(read_file(statement_file, digest));
            else if (!statement_text.empty())
                statements.push_back(parse_statement(statement_text));
            else
                throw UsageError("check needs a statement or --file");
            Structure s = structure == "boolean" ? Structure(BooleanSetAlgebra{dim})
                                                 : Structure(SubspaceLattice{dim, parse_field(field)});
            auto reports = nlohmann::json::array();
            for (const auto& stmt : statements) {
                const CheckReport r = check(stmt, s, trials, seed);
                if (r.counterexample)
                    code = kCounterexample;
                reports.push_back(to_json(r));
            }
            results = statements.size() == 1 ? reports.front() : nlohmann::json{{"checks", reports}};
        } else if (*props) {
            const Proposition p = proposition_from_json(read_json(prop_file, digest));
            const Vector psi = load_state(state_file, digest);
            results = {{"holds", eval(p, psi)}, {"state", to_json(psi)}};
        } else if (*process) {
            const auto stages = process_from_json(read_json(process_file, digest));
            const auto histories = run(stages);
            results = report_json(Demo{stages, {}, {}}, histories);
        }
    } catch (const UsageError& e) {
        err << "qlogic: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "qlogic: parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "qlogic: malformed input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "qlogic: " << e.what() << "\n";
        return kUsage;
    }

    const nlohmann::json report{{"command", command},
                                {"inputs_digest", digest.hex()},
                                {"seed", seed},
                                {"version", kVersion},
                                {"results", results}};
    if (format == "json")
        out << report.dump(2) << "\n";
    else
        out << render_text(report);
    return code;
}

} // namespace qlogic::cli
