#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "leibniz/io.hpp"
#include "leibniz/onegen.hpp"
#include "leibniz/verify.hpp"

namespace leibniz::cli {

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

std::string triple_text(const LeibnizAlgebra& L, const std::array<std::size_t, 3>& t) {
    return "(" + L.label(t[0]) + ", " + L.label(t[1]) + ", " + L.label(t[2]) + ")";
}

int cmd_check(const std::string& file, std::ostream& out) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    const LeibnizAlgebra L = parse_algebra_unchecked(buf.str());
    const auto res = check_left_leibniz(L);
    if (res) {
        out << "left Leibniz identity holds (dim " << L.dim() << ", p = " << L.field().p() << ")\n";
        return Ok;
    }
    out << "left Leibniz identity fails at triple " << triple_text(L, *res.failing_triple) << "\n";
    return Negative;
}

int cmd_kernel(const std::string& file, std::ostream& out) {
    const LeibnizAlgebra L = load_algebra(file);
    const Subspace K = leibniz_kernel(L);
    out << "Leib(L) = " << format_subspace(L, K) << "\n";
    out << "dim " << K.dim() << "\n";
    return Ok;
}

int cmd_lattice(const std::string& file, const std::string& dot, const std::string& json, std::ostream& out) {
    const LeibnizAlgebra L = load_algebra(file);
    const auto lat = build_lattice(L);
    out << lat.size() << " nodes\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
        out << "  [" << i << "] dim " << lat.node(i).dim() << "  " << format_subspace(L, lat.node(i));
        if (lat.kernel_node() == i) out << "  (kernel)";
        out << "\n";
    }
    out << "covers:";
    for (auto [lo, hi] : lat.covers()) out << " " << lo << "<" << hi;
    out << "\n";
    if (auto p = find_pentagon(lat.order()))
        out << "not modular: pentagon " << p->bottom << " < " << p->low << " < " << p->high << " < " << p->top
            << " with side " << p->side << "\n";
    else
        out << "modular\n";
    if (!dot.empty()) write_file(dot, lattice_dot(L, lat));
    if (!json.empty()) write_file(json, lattice_json(L, lat));
    return Ok;
}

OneGeneratorData onegen_from_args(const std::string& poly, std::uint32_t p) {
    const PrimeField F(p);
    const Polynomial f = parse_polynomial(F, poly);
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("polynomial must be monic of degree >= 1");
    return one_generator_algebra(F, f);
}

int cmd_signature(const std::string& poly, std::uint32_t p, std::ostream& out) {
    out << signature(onegen_from_args(poly, p)).to_string() << "\n";
    return Ok;
}

int cmd_onegen(const std::string& poly, std::uint32_t p, bool verify, std::ostream& out) {
    const auto D = onegen_from_args(poly, p);
    const LeibnizAlgebra& L = D.algebra;
    out << "f = " << D.f.to_string() << ", r = " << D.r << ", g = " << D.g.to_string() << "\n";
    out << "signature " << signature(D).to_string() << "\n";
    out << "products:\n";
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
            auto v = L.product(i, j);
            if (!is_zero(v)) out << "  " << L.label(i) << " * " << L.label(j) << " = " << format_vector(L, v) << "\n";
        }
    out << "Leib(L) = " << format_subspace(L, leibniz_kernel(L)) << "\n";
    out << "b = " << format_vector(L, nilpotent_generator(D)) << "\n";
    if (!verify) return Ok;
    const auto rep = verify_onegen_classification(D);
    out << "classification: " << rep.off_v_found << " subalgebras off V, predicted " << rep.off_v_predicted
        << "; sets match: " << (rep.sets_match ? "yes" : "no")
        << "; interval is chain product: " << (rep.interval_is_chain_product ? "yes" : "no")
        << "; all contain B: " << (rep.all_contain_b ? "yes" : "no") << "\n";
    out << (rep.ok ? "verified\n" : "FAILED\n");
    return rep.ok ? Ok : Negative;
}

int cmd_iso(const std::string& file1, const std::string& file2, std::ostream& out) {
    const LeibnizAlgebra A = load_algebra(file1);
    const LeibnizAlgebra B = load_algebra(file2);
    const auto la = build_lattice(A);
    const auto lb = build_lattice(B);
    const auto found = find_isomorphisms(la.order(), lb.order(), 1);
    if (found.empty()) {
        out << "not isomorphic (" << la.size() << " vs " << lb.size() << " nodes)\n";
        return Negative;
    }
    out << "isomorphic\n";
    const auto& m = found.maps.front();
    for (std::size_t i = 0; i < la.size(); ++i)
        out << "  " << format_subspace(A, la.node(i)) << " -> " << format_subspace(B, lb.node(m(i))) << "\n";
    return Ok;
}

int cmd_verify(const std::string& spec_path, const std::string& out_path, bool timing, std::ostream& out) {
    std::ifstream in(spec_path);
    if (!in) throw ParseError("cannot open " + spec_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto spec = parse_spec_file(buf.str());
    const auto rep = run_verification(spec.catalogs, spec.options);
    const std::string json = report_json(rep, timing);
    if (out_path.empty()) out << json;
    else write_file(out_path, json);
    out << "algebras " << rep.algebras_checked << ", pairs " << rep.pairs_checked << ", violations "
        << rep.violations.size() << ", diamond exceptions " << rep.diamond_exceptions << ", errors "
        << rep.errors.size() << "\n";
    out << (rep.passed() ? "PASS\n" : "FAIL\n");
    return rep.passed() ? Ok : Negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subalgebra lattices of finite-dimensional left Leibniz algebras over GF(p)", "leibniz"};
    app.require_subcommand(1);

    std::string file, file2, dot, json, poly, spec, out_path;
    std::uint32_t p = 2;
    bool verify = false;
    bool timing = false;

    auto* check = app.add_subcommand("check", "Check the left Leibniz identity");
    check->add_option("FILE", file, "algebra file")->required();
    auto* kernel = app.add_subcommand("kernel", "Print a basis of the Leibniz kernel");
    kernel->add_option("FILE", file, "algebra file")->required();
    auto* lattice = app.add_subcommand("lattice", "List the subalgebra lattice");
    lattice->add_option("FILE", file, "algebra file")->required();
    lattice->add_option("--dot", dot, "write the Hasse diagram as DOT");
    lattice->add_option("--json", json, "write the lattice as JSON");
    auto* sig = app.add_subcommand("signature", "Signature of the one-generator algebra of f");
    sig->add_option("--poly", poly, "monic polynomial, e.g. x^2+1")->required();
    sig->add_option("--p", p, "field characteristic")->required();
    auto* onegen = app.add_subcommand("onegen", "Describe the one-generator algebra of f");
    onegen->add_option("--poly", poly, "monic polynomial")->required();
    onegen->add_option("--p", p, "field characteristic")->required();
    onegen->add_flag("--verify", verify, "check the subalgebra classification");
    auto* iso = app.add_subcommand("iso", "Decide whether two subalgebra lattices are isomorphic");
    iso->add_option("FILE1", file, "first algebra file")->required();
    iso->add_option("FILE2", file2, "second algebra file")->required();
    auto* ver = app.add_subcommand("verify", "Run the verification harness");
    ver->add_option("--spec", spec, "catalog spec file")->required();
    ver->add_option("--out", out_path, "report path (default: stdout)");
    ver->add_flag("--timing", timing, "include runtime_seconds in the report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return Usage;
    }

    try {
        if (*check) return cmd_check(file, out);
        if (*kernel) return cmd_kernel(file, out);
        if (*lattice) return cmd_lattice(file, dot, json, out);
        if (*sig) return cmd_signature(poly, p, out);
        if (*onegen) return cmd_onegen(poly, p, verify, out);
        if (*iso) return cmd_iso(file, file2, out);
        if (*ver) return cmd_verify(spec, out_path, timing, out);
    } catch (const IdentityFailure& e) {
        err << e.what() << "\n";
        return Negative;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return Usage;
    }
    return Usage;
}

}  // namespace leibniz::cli
