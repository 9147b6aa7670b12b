#include "chenruan/cli.hpp"

#include "chenruan/expression.hpp"
#include "chenruan/sector_model.hpp"
#include "chenruan/table_io.hpp"
#include "chenruan/verification.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace chenruan {

namespace {

std::string join(const std::vector<BigInt>& values, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += values[i].get_str();
    }
    return out;
}

std::vector<BigInt> integer_coefficients(const IntPolynomial& p) {
    std::vector<BigInt> out;
    for (const auto& c : p.coefficients()) out.push_back(c.get_num());
    return out;
}

std::string describe(const SectorDescriptor& d) {
    const int g = d.label.genus();
    std::ostringstream out;
    out << "label: " << d.label.str() << "\n"
        << "trivial: " << (d.label.is_trivial() ? "true" : "false") << "\n"
        << "degree_shift: " << to_string(d.shift) << "\n"
        << "fixed_locus_complex_dim: " << d.fixed_locus_complex_dim << "\n";
    out << "eigenvalues:";
    const EigenvalueData spectrum = eigen_data_for(d.label);
    for (const auto& e : spectrum.entries())
        out << " (" << to_string(e.fraction) << ", " << e.multiplicity << ")";
    out << "\n";
    if (d.label.is_trivial()) {
        out << "betti: " << join(integer_coefficients(untwisted_poincare(g)), ",") << "\n";
    } else {
        out << "covering_genus: " << d.covering_genus << "\n"
            << "prym_dim: " << d.prym_dim << "\n"
            << "w0_dim: " << d.w0_dim << "\n"
            << "betti: " << join(integer_coefficients(twisted_sector_poincare(g)), ",") << "\n";
    }
    return out.str();
}

}  // namespace

std::string format_betti(int g, BettiFormat format) {
    const auto betti = cr_poincare(g).betti();
    std::ostringstream out;
    switch (format) {
        case BettiFormat::Csv: out << join(betti, ",") << "\n"; break;
        case BettiFormat::Json: {
            const auto untwisted = integer_coefficients(untwisted_poincare(g));
            const auto twisted = integer_coefficients(twisted_sector_poincare(g));
            out << "{\"genus\": " << g << ", \"betti\": [" << join(betti, ", ") << "], \"euler_characteristic\": "
                << cr_poincare(g).euler_characteristic().get_str() << ", \"untwisted\": [" << join(untwisted, ", ")
                << "], \"twisted_sector\": [" << join(twisted, ", ") << "], \"twisted_shift\": " << 2 * g - 2
                << ", \"twisted_sector_count\": " << BigInt((BigInt(1) << (2 * g)) - 1).get_str() << "}\n";
            break;
        }
        case BettiFormat::Latex: {
            out << "\\begin{tabular}{l|" << std::string(betti.size(), 'r') << "}\n";
            out << "$i$";
            for (std::size_t i = 0; i < betti.size(); ++i) out << " & " << i;
            out << " \\\\\n\\hline\n$b_i$";
            for (const auto& b : betti) out << " & " << b.get_str();
            out << " \\\\\n\\end{tabular}\n";
            break;
        }
    }
    return out.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chen–Ruan cohomology of the moduli of PSL(2,C)-bundles"};
    app.require_subcommand(1);
    int genus = 2;
    auto add_genus = [&](CLI::App* sub) { sub->add_option("--genus,-g", genus, "curve genus g >= 2")->required(); };

    auto* betti = app.add_subcommand("betti", "CR Betti numbers");
    add_genus(betti);
    std::string format = "csv";
    betti->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "latex"}));

    auto* constants_cmd = app.add_subcommand("constants", "intersection constants");
    add_genus(constants_cmd);

    std::string lhs, rhs;
    auto* product_cmd = app.add_subcommand("product", "Chen–Ruan product of two classes");
    add_genus(product_cmd);
    product_cmd->add_option("--lhs", lhs)->required();
    product_cmd->add_option("--rhs", rhs)->required();

    auto* pair_cmd = app.add_subcommand("pair", "Poincaré pairing of two classes");
    add_genus(pair_cmd);
    pair_cmd->add_option("--lhs", lhs)->required();
    pair_cmd->add_option("--rhs", rhs)->required();

    // Three scalar positionals: a vector option would apply CLI11's "[a,b]"
    // list syntax to sector atoms.
    std::string triple_args[3];
    auto* triple_cmd = app.add_subcommand("triple", "three-point function <A*B, C>");
    add_genus(triple_cmd);
    triple_cmd->add_option("A", triple_args[0])->required();
    triple_cmd->add_option("B", triple_args[1])->required();
    triple_cmd->add_option("C", triple_args[2])->required();

    std::string label_text;
    auto* sector_cmd = app.add_subcommand("sector", "describe one sector");
    add_genus(sector_cmd);
    sector_cmd->add_option("--label", label_text)->required();

    std::string suite_name;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 0;
    auto* verify_cmd = app.add_subcommand("verify", "check ring axioms");
    add_genus(verify_cmd);
    verify_cmd->add_option("--suite", suite_name)
        ->required()
        ->check(CLI::IsMember({"assoc", "frobenius", "graded", "pairing", "all"}));
    verify_cmd->add_option("--samples", samples, "seeded sample count (default: exhaustive when g <= 3, else 1000)");
    verify_cmd->add_option("--seed", seed);

    std::string out_path;
    auto* table_cmd = app.add_subcommand("table", "export structure constants as JSON");
    add_genus(table_cmd);
    table_cmd->add_option("--out", out_path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        require_genus(genus);
        if (*betti) {
            const BettiFormat f = format == "json" ? BettiFormat::Json
                                  : format == "latex" ? BettiFormat::Latex
                                                      : BettiFormat::Csv;
            out << format_betti(genus, f);
        } else if (*constants_cmd) {
            const auto c = constants(genus);
            out << "genus: " << genus << "\n"
                << "thaddeus_number: " << to_string(c.thaddeus_number) << "\n"
                << "v: " << to_string(c.v) << "\n";
        } else if (*product_cmd) {
            const ChenRuanRing ring(genus);
            out << format_class(ring.product(parse_class(lhs, genus), parse_class(rhs, genus))) << "\n";
        } else if (*pair_cmd) {
            const ChenRuanRing ring(genus);
            out << to_string(ring.poincare_pair(parse_class(lhs, genus), parse_class(rhs, genus))) << "\n";
        } else if (*triple_cmd) {
            const ChenRuanRing ring(genus);
            out << to_string(ring.three_point(parse_class(triple_args[0], genus), parse_class(triple_args[1], genus),
                                              parse_class(triple_args[2], genus)))
                << "\n";
        } else if (*sector_cmd) {
            out << describe(describe_sector(TwoTorsionLabel::parse(label_text, genus)));
        } else if (*verify_cmd) {
            const ChenRuanRing ring(genus);
            Sampler sampler = Sampler::seeded(samples.value_or(1000), seed);
            if (!samples && genus <= kMaxExhaustiveGenus) sampler = Sampler::exhaustive();
            std::vector<Suite> suites;
            if (suite_name == "all")
                suites = {Suite::Associativity, Suite::Frobenius, Suite::Graded, Suite::PairingRank};
            else
                suites = {parse_suite(suite_name)};
            bool ok = true;
            for (Suite s : suites) {
                const auto report = verify(ring, s, sampler);
                out << report.summary() << "\n";
                for (std::size_t i = 0; i < report.violations.size() && i < 10; ++i)
                    out << "  " << report.violations[i] << "\n";
                ok = ok && report.passed();
            }
            return ok ? kExitOk : kExitViolation;
        } else if (*table_cmd) {
            if (genus > kMaxExhaustiveGenus)
                throw std::invalid_argument("table export is limited to genus <= " +
                                            std::to_string(kMaxExhaustiveGenus));
            const auto doc = build_table_document(ChenRuanRing(genus));
            std::ofstream file(out_path);
            if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
            file << to_json(doc);
            out << "wrote " << doc.basis.size() << " basis elements, " << doc.products.size() << " products, "
                << doc.pairings.size() << " pairing blocks to " << out_path << "\n";
        }
    } catch (const ParseError& e) {
        err << "error: expression " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace chenruan
