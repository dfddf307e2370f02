// Copyright 2026 The qpsim developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpsim/analysis.hpp"
#include "qpsim/serialize.hpp"
#include "qpsim/verify.hpp"

namespace {

using namespace qpsim;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& text) {
    try {
        std::size_t used = 0;
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) {
                throw CliError("trailing characters in number: " + text);
            }
            return Complex{re, 0.0};
        }
        const std::string re_s = text.substr(0, comma);
        const std::string im_s = text.substr(comma + 1);
        const double re = std::stod(re_s, &used);
        if (used != re_s.size()) {
            throw CliError("trailing characters in number: " + re_s);
        }
        const double im = std::stod(im_s, &used);
        if (used != im_s.size()) {
            throw CliError("trailing characters in number: " + im_s);
        }
        return Complex{re, im};
    } catch (const CliError&) {
        throw;
    } catch (const std::exception&) {
        throw CliError("cannot parse complex value 're[,im]': " + text);
    }
}

ChannelSpec resolve_channel(bool has_alpha, double alpha, bool has_beta, double beta) {
    if (has_alpha && has_beta) {
        ChannelSpec c{alpha, beta};
        c.validate();
        return c;
    }
    if (has_alpha) {
        if (!(alpha >= 1.0 / std::numbers::sqrt2 - kConstructTol) || alpha > 1.0 + kConstructTol) {
            throw CliError("alpha must lie in [1/sqrt(2), 1]");
        }
        const double derived = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
        ChannelSpec c{alpha, derived};
        c.validate();
        return c;
    }
    if (has_beta) {
        return ChannelSpec::from_beta(beta);
    }
    return ChannelSpec::maximal();
}

InputQubit resolve_input(const std::string& a_text, const std::string& b_text) {
    if (a_text.empty() != b_text.empty()) {
        throw CliError("provide both --a and --b, or neither");
    }
    if (a_text.empty()) {
        return reference_input();
    }
    return InputQubit::normalized(parse_complex(a_text), parse_complex(b_text));
}

std::string resolve_format(std::string format) {
    if (format.empty()) {
        const char* env = std::getenv("QPSIM_FORMAT");
        format = env != nullptr ? env : "json";
    }
    std::transform(format.begin(), format.end(), format.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (format != "json" && format != "csv") {
        throw CliError("format must be 'json' or 'csv', got '" + format + "'");
    }
    return format;
}

void write_output(const std::string& out_path, std::string text) {
    if (text.empty() || text.back() != '\n') {
        text += '\n';
    }
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw CliError("cannot open output file: " + out_path);
    }
    f << text;
}

void require_known_protocol(const std::string& id) {
    const auto& ids = protocol_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        std::string all;
        for (const auto& p : ids) {
            all += all.empty() ? p : ", " + p;
        }
        throw CliError("unknown protocol '" + id + "' (choose from: " + all + ")");
    }
}

Json run_trace_json(const std::string& id, const InputQubit& q, const ChannelSpec& c,
                    std::uint64_t seed) {
    Rng rng(seed);
    if (id == "hbb") {
        if (!c.is_maximal()) {
            throw CliError("hbb runs on the maximally entangled channel only");
        }
        return to_json(hbb_secret_share(q, rng));
    }
    if (id == "css1_mh") {
        return to_json(css1(q, c, AliceMethod::MH, rng));
    }
    if (id == "css1_qact1") {
        return to_json(css1(q, c, AliceMethod::QACT1, rng));
    }
    if (id == "css2") {
        return to_json(css2(q, c, rng));
    }
    if (id == "css3") {
        return to_json(css3(q, c, rng));
    }
    return to_json(run_protocol(id, q, c, rng));
}

int cmd_run(const std::string& id, const ChannelSpec& c, const InputQubit& q, std::uint64_t seed,
            const std::string& format, const std::string& out) {
    Json j = run_trace_json(id, q, c, seed);
    j["channel"] = to_json(c);
    j["input"] = to_json(q);
    j["seed"] = seed;
    if (format == "json") {
        write_output(out, j.dump(2));
        return 0;
    }
    int total = 0;
    for (const auto& [channel, n] : j.at("bits").items()) {
        total += n.get<int>();
    }
    std::ostringstream csv;
    csv << "protocol,alpha,beta,seed,success,fidelity,bits_total\n";
    csv << csv_escape(id) << ',' << format_double(c.alpha) << ',' << format_double(c.beta) << ','
        << seed << ',' << (j.at("success").get<bool>() ? "true" : "false") << ','
        << format_double(j.at("fidelity").get<double>()) << ',' << total << '\n';
    write_output(out, csv.str());
    return 0;
}

int cmd_sweep(const std::vector<std::string>& protocols, const std::vector<double>& betas,
              const std::string& format, const std::string& out) {
    for (double beta : betas) {
        if (!(beta > 0.0) || beta > 1.0 / std::numbers::sqrt2 + kConstructTol) {
            throw CliError("sweep beta values must lie in (0, 1/sqrt(2)]");
        }
    }
    for (const auto& id : protocols) {
        require_known_protocol(id);
    }

    Json rows = Json::array();
    std::ostringstream csv;
    csv << "protocol,beta,p_success,expected_bits,fidelity_given_success\n";
    for (const auto& id : protocols) {
        for (double beta : betas) {
            const ChannelSpec c = ChannelSpec::from_beta(beta);
            if (id == "hbb" && !c.is_maximal()) {
                std::cerr << "note: skipping hbb at beta=" << beta
                          << " (defined on the maximal channel only)\n";
                continue;
            }
            const double p = success_probability(id, c);
            const auto dist = enumerate_protocol(id, reference_input(), c);
            const double bits = dist.expected_bits_total();
            const double fid = dist.fidelity_given_success();
            rows.push_back(Json{{"protocol", id},
                                {"beta", beta},
                                {"p_success", p},
                                {"expected_bits", bits},
                                {"fidelity_given_success",
                                 std::isnan(fid) ? Json(nullptr) : Json(fid)}});
            csv << csv_escape(id) << ',' << format_double(beta) << ',' << format_double(p) << ','
                << format_double(bits) << ',' << format_double(fid) << '\n';
        }
    }
    write_output(out, format == "json" ? rows.dump(2) : csv.str());
    return 0;
}

int cmd_sample(const std::string& id, const ChannelSpec& c, const InputQubit& q,
               std::uint64_t shots, std::uint64_t seed, const std::string& format,
               const std::string& out) {
    if (shots < 1) {
        throw CliError("shots must be >= 1");
    }
    if (id == "hbb" && !c.is_maximal()) {
        throw CliError("hbb runs on the maximally entangled channel only");
    }
    const double exact = success_probability(id, c);
    const SampleStats stats = monte_carlo(id, q, c, shots, seed);
    const double freq = static_cast<double>(stats.successes) / static_cast<double>(shots);
    const double bound = 4.0 * std::sqrt(exact * (1.0 - exact) / static_cast<double>(shots));
    const bool pass = std::abs(freq - exact) <= bound;

    if (format == "json") {
        Json j = to_json(stats);
        j["protocol"] = id;
        j["channel"] = to_json(c);
        j["input"] = to_json(q);
        j["exact_probability"] = exact;
        j["bound_4sigma"] = bound;
        j["verdict"] = pass ? "PASS" : "FAIL";
        write_output(out, j.dump(2));
        return 0;
    }
    std::ostringstream csv;
    csv << "protocol,beta,shots,seed,successes,success_frequency,exact_probability,"
           "bound_4sigma,verdict,mean_fidelity\n";
    csv << csv_escape(id) << ',' << format_double(c.beta) << ',' << shots << ',' << seed << ','
        << stats.successes << ',' << format_double(freq) << ',' << format_double(exact) << ','
        << format_double(bound) << ',' << (pass ? "PASS" : "FAIL") << ','
        << format_double(stats.mean_fidelity) << '\n';
    write_output(out, csv.str());
    return 0;
}

int cmd_verify(const std::string& format, const std::string& out) {
    const auto results = run_verification();
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
    }
    if (format == "json") {
        Json j = Json::array();
        for (const auto& r : results) {
            j.push_back(to_json(r));
        }
        write_output(out, j.dump(2));
    } else {
        std::ostringstream text;
        int passed = 0;
        for (const auto& r : results) {
            passed += r.pass ? 1 : 0;
            text << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " -- " << r.detail << '\n';
        }
        text << passed << '/' << results.size() << " criteria passed\n";
        write_output(out, text.str());
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qpsim: exact simulator for teleportation and quantum secret sharing over pure "
                 "entangled channels"};
    app.require_subcommand(1);

    std::string protocol;
    double alpha = 0.0;
    double beta = 0.0;
    std::string a_text, b_text;
    std::uint64_t seed = 1;
    std::uint64_t shots = 0;
    std::string format;
    std::string out;
    std::vector<std::string> protocols;
    std::vector<double> betas;

    auto add_channel_opts = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "Larger Schmidt coefficient (beta derived)");
        cmd->add_option("--beta", beta, "Smaller Schmidt coefficient (alpha derived)");
    };
    auto add_input_opts = [&](CLI::App* cmd) {
        cmd->add_option("--a", a_text, "Input amplitude a as 're[,im]' (default: reference state)");
        cmd->add_option("--b", b_text, "Input amplitude b as 're[,im]'");
    };
    auto add_io_opts = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: json or csv (env QPSIM_FORMAT)");
        cmd->add_option("--out", out, "Write output to this file instead of stdout");
    };

    CLI::App* run = app.add_subcommand("run", "Execute one seeded protocol run; print the trace");
    run->add_option("--protocol", protocol, "Protocol id")->required();
    add_channel_opts(run);
    add_input_opts(run);
    run->add_option("--seed", seed, "RNG seed (default 1)");
    add_io_opts(run);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Exact success probability, expected bits and fidelity over a beta grid");
    sweep->add_option("--protocols", protocols, "Comma-separated protocol ids (default: all)")
        ->delimiter(',');
    sweep->add_option("--betas", betas, "Comma-separated beta grid in (0, 1/sqrt(2)]")
        ->delimiter(',');
    add_io_opts(sweep);

    CLI::App* sample = app.add_subcommand("sample", "Seeded Monte Carlo against the exact value");
    sample->add_option("--protocol", protocol, "Protocol id")->required();
    add_channel_opts(sample);
    add_input_opts(sample);
    sample->add_option("--shots", shots, "Number of shots (>= 1)")->required();
    sample->add_option("--seed", seed, "RNG seed (default 1)");
    add_io_opts(sample);

    CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite");
    add_io_opts(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(run)) {
            require_known_protocol(protocol);
            const ChannelSpec c = resolve_channel(run->count("--alpha") > 0, alpha,
                                                  run->count("--beta") > 0, beta);
            return cmd_run(protocol, c, resolve_input(a_text, b_text), seed,
                           resolve_format(format), out);
        }
        if (app.got_subcommand(sweep)) {
            if (protocols.empty()) {
                protocols = protocol_ids();
            }
            if (betas.empty()) {
                betas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 1.0 / std::numbers::sqrt2};
            }
            return cmd_sweep(protocols, betas, resolve_format(format), out);
        }
        if (app.got_subcommand(sample)) {
            require_known_protocol(protocol);
            const ChannelSpec c = resolve_channel(sample->count("--alpha") > 0, alpha,
                                                  sample->count("--beta") > 0, beta);
            return cmd_sample(protocol, c, resolve_input(a_text, b_text), shots, seed,
                              resolve_format(format), out);
        }
        if (app.got_subcommand(verify)) {
            // Human-readable by default; QPSIM_FORMAT applies to data commands only.
            std::string vfmt = format.empty() ? "text" : format;
            std::transform(vfmt.begin(), vfmt.end(), vfmt.begin(),
                           [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
            if (vfmt != "text" && vfmt != "json") {
                throw CliError("verify supports --format text or json");
            }
            return cmd_verify(vfmt, out);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qpsim::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
