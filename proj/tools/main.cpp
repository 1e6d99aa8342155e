// rblie: exact formal integration of Rota-Baxter Lie algebras.
//
// Subcommands operate on algebra definition files (JSON with exact rational
// entries); all numeric output is rational strings. Exit codes: 0 success,
// 1 verification failure, 2 input error.

#include "rblie/free_lie.hpp"
#include "rblie/graded.hpp"
#include "rblie/group_rb.hpp"
#include "rblie/io.hpp"
#include "rblie/sampling.hpp"
#include "rblie/uea.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace rblie;
using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

AlgebraSpec load_spec(const std::string& path) {
    try {
        return AlgebraSpec::load(path);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

RBLieAlgebra require_rb(const AlgebraSpec& spec) {
    if (!spec.rb) throw InputError("algebra file has no 'rb' operator");
    return RBLieAlgebra(*spec.algebra, *spec.rb);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << text;
}

json coords_json(const Vec& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(to_string(c));
    return arr;
}

json integrate_record(const RBGroupOperator& op, const Vec& x, bool with_closed) {
    json rec;
    rec["input"] = coords_json(x);
    rec["rb_hopf"] = coords_json(op.via_hopf(x));
    rec["rb_magnus"] = coords_json(op.via_magnus(x));
    if (with_closed) {
        auto cls = op.source().algebra().nilpotency_class();
        try {
            rec["rb_closed"] = coords_json(op.closed_formula(x, *cls <= 2 ? 3 : 4));
        } catch (const std::invalid_argument&) {
            // hypotheses of the closed formulas not met; omit the field
        }
    }
    json omega = json::array();
    for (const auto& comp : op.magnus_components(x)) omega.push_back(coords_json(comp));
    rec["omega"] = omega;
    return rec;
}

int cmd_check(const std::string& file) {
    AlgebraSpec spec = load_spec(file);
    auto rep = spec.algebra->validate();
    std::cout << "jacobi: " << (rep.jacobi_ok ? "pass" : "fail") << "\n";
    std::cout << "filtration: " << (rep.filtration_ok ? "pass" : "fail") << "\n";
    if (!rep.jacobi_ok && rep.jacobi_witness)
        std::cerr << "jacobi witness: basis triple (" << (*rep.jacobi_witness)[0] << ","
                  << (*rep.jacobi_witness)[1] << "," << (*rep.jacobi_witness)[2] << ")\n";
    if (!rep.filtration_ok && rep.filtration_witness)
        std::cerr << "filtration witness: levels (" << rep.filtration_witness->first << ","
                  << rep.filtration_witness->second << ")\n";
    bool ok = rep.ok();
    if (spec.rb) {
        auto witness = verify_rb_weight1(*spec.algebra, *spec.rb);
        bool chain_ok = spec.rb->preserves_filtration();
        std::cout << "rb: " << (!witness ? "pass" : "fail") << "\n";
        std::cout << "rb-filtration: " << (chain_ok ? "pass" : "fail") << "\n";
        if (witness)
            std::cerr << "rb witness: basis pair (" << witness->i << "," << witness->j << ")\n";
        ok = ok && !witness && chain_ok;
    }
    return ok ? 0 : 1;
}

int cmd_vectors(const std::string& file, int count, std::uint64_t seed) {
    AlgebraSpec spec = load_spec(file);
    RBLieAlgebra src = require_rb(spec);
    RBGroupOperator op(src);
    json header;
    header["seed"] = seed;
    header["count"] = count;
    header["dim"] = spec.algebra->dim();
    std::cout << header.dump() << "\n";
    RationalSampler sampler(seed);
    for (int i = 0; i < count; ++i) {
        Vec x = sampler.vec(spec.algebra->dim());
        json rec = integrate_record(op, x, true);
        rec["index"] = i;
        std::cout << rec.dump() << "\n";
        if (rec["rb_hopf"] != rec["rb_magnus"]) {
            std::cerr << "dual-path mismatch at index " << i << "\n";
            return 1;
        }
    }
    return 0;
}

int cmd_verify(const std::string& file, const std::string& records_path) {
    AlgebraSpec spec = load_spec(file);
    RBLieAlgebra src = require_rb(spec);
    RBGroupOperator op(src);
    std::ifstream in(records_path);
    if (!in) throw InputError("cannot open records file: " + records_path);
    std::string line;
    if (!std::getline(in, line)) throw InputError("records file is empty");
    json header = json::parse(line);
    int index = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        Vec x;
        for (const auto& c : rec.at("input")) x.push_back(parse_rational(c.get<std::string>()));
        json expect = integrate_record(op, x, rec.contains("rb_closed"));
        expect["index"] = rec.at("index");
        if (expect != rec) {
            std::cerr << "record mismatch at index " << index << "\n";
            return 1;
        }
        ++index;
    }
    std::cout << "verified " << index << " records\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact formal integration of Rota-Baxter Lie algebras"};
    app.require_subcommand(1);

    std::string file, x_str, y_str, via = "hopf", op_name, a_str, b_str, u_str;
    std::string out_path, records_path, a_rows, b_rows;
    int count = 10, samples = 100, gens = 2, nil_class = 2, levels = 2, max_degree = 0;
    std::uint64_t seed = 1;
    bool emit_json = false;

    auto* check = app.add_subcommand("check", "validate the algebra and its operator");
    check->add_option("file", file)->required();

    auto* bch_cmd = app.add_subcommand("bch", "BCH group product of two elements");
    bch_cmd->add_option("file", file)->required();
    bch_cmd->add_option("--x", x_str)->required();
    bch_cmd->add_option("--y", y_str)->required();

    auto* integrate = app.add_subcommand("integrate", "integrated Rota-Baxter operator");
    integrate->add_option("file", file)->required();
    integrate->add_option("--x", x_str)->required();
    integrate->add_option("--via", via)->check(CLI::IsMember({"hopf", "magnus", "closed"}));
    integrate->add_flag("--json", emit_json, "emit a full JSON record");

    auto* magnus_cmd = app.add_subcommand("magnus", "post-Lie Magnus expansion components");
    magnus_cmd->add_option("file", file)->required();
    magnus_cmd->add_option("--x", x_str)->required();
    magnus_cmd->add_option("--max-degree", max_degree);

    auto* brace_cmd = app.add_subcommand("brace", "brace compatibility law check");
    brace_cmd->add_option("file", file)->required();
    brace_cmd->add_option("--samples", samples);
    brace_cmd->add_option("--seed", seed);

    auto* grade = app.add_subcommand("grade", "graded Rota-Baxter Lie ring");
    grade->add_option("file", file)->required();

    auto* uea_cmd = app.add_subcommand("uea", "truncated enveloping algebra operations");
    uea_cmd->add_option("file", file)->required();
    uea_cmd->add_option("--op", op_name)->required()
        ->check(CLI::IsMember({"product", "star", "exp", "log"}));
    uea_cmd->add_option("--a", a_str, "coordinates of a Lie element operand");
    uea_cmd->add_option("--b", b_str, "coordinates of a Lie element operand");
    uea_cmd->add_option("--x", x_str, "coordinates for exp");
    uea_cmd->add_option("--u", u_str, "serialized element for log");

    auto* gen = app.add_subcommand("gen", "generate canonical algebra files");
    auto* gen_free = gen->add_subcommand("free", "free nilpotent algebra");
    gen_free->add_option("--gens", gens)->required();
    gen_free->add_option("--class", nil_class)->required();
    gen_free->add_option("-o,--output", out_path)->required();
    auto* gen_poly = gen->add_subcommand("poly", "polynomial h-truncation extension");
    gen_poly->add_option("file", file)->required();
    gen_poly->add_option("--levels", levels)->required();
    gen_poly->add_option("-o,--output", out_path)->required();
    auto* gen_split = gen->add_subcommand("split", "splitting Rota-Baxter operator");
    gen_split->add_option("file", file)->required();
    gen_split->add_option("--a", a_rows, "subspace A: vectors separated by ';'")->required();
    gen_split->add_option("--b", b_rows, "subspace B: vectors separated by ';'")->required();
    gen_split->add_option("-o,--output", out_path)->required();

    auto* vectors = app.add_subcommand("vectors", "emit seeded golden records");
    vectors->add_option("file", file)->required();
    vectors->add_option("--count", count);
    vectors->add_option("--seed", seed);

    auto* verify = app.add_subcommand("verify", "re-check emitted golden records");
    verify->add_option("file", file)->required();
    verify->add_option("--records", records_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(file);

        if (bch_cmd->parsed()) {
            AlgebraSpec spec = load_spec(file);
            BCHGroup group(*spec.algebra);
            Vec x = parse_coords(x_str, spec.algebra->dim());
            Vec y = parse_coords(y_str, spec.algebra->dim());
            std::cout << format_coords(group.mul(x, y)) << "\n";
            return 0;
        }

        if (integrate->parsed()) {
            AlgebraSpec spec = load_spec(file);
            RBLieAlgebra src = require_rb(spec);
            RBGroupOperator op(src);
            Vec x = parse_coords(x_str, spec.algebra->dim());
            IntegrationRoute route = via == "hopf"    ? IntegrationRoute::Hopf
                                     : via == "magnus" ? IntegrationRoute::Magnus
                                                       : IntegrationRoute::Closed;
            Vec r = op.via(route, x);
            if (emit_json) {
                json rec;
                rec["input"] = coords_json(x);
                rec["rb_group"] = coords_json(r);
                rec["via"] = via;
                std::cout << rec.dump() << "\n";
            } else {
                std::cout << format_coords(r) << "\n";
            }
            return 0;
        }

        if (magnus_cmd->parsed()) {
            AlgebraSpec spec = load_spec(file);
            RBLieAlgebra src = require_rb(spec);
            RBGroupOperator op(src);
            Vec x = parse_coords(x_str, spec.algebra->dim());
            auto comps = op.magnus_components(x);
            int limit = max_degree > 0 ? max_degree : static_cast<int>(comps.size());
            for (int n = 1; n <= limit && n <= static_cast<int>(comps.size()); ++n) {
                json rec;
                rec["degree"] = n;
                rec["omega"] = coords_json(comps[n - 1]);
                std::cout << rec.dump() << "\n";
            }
            return 0;
        }

        if (brace_cmd->parsed()) {
            AlgebraSpec spec = load_spec(file);
            auto cls = spec.algebra->nilpotency_class();
            RationalSampler sampler(seed);
            std::vector<std::array<Vec, 3>> triples;
            for (int i = 0; i < samples; ++i)
                triples.push_back({sampler.vec(spec.algebra->dim()),
                                   sampler.vec(spec.algebra->dim()),
                                   sampler.vec(spec.algebra->dim())});
            std::cerr << "seed: " << seed << "\n";
            if (cls && *cls <= 2) {
                Brace brace(*spec.algebra);
                auto rep = brace.verify(triples);
                std::cout << "brace: " << (rep.ok ? "pass" : "fail") << "\n";
                return rep.ok ? 0 : 1;
            }
            BCHGroup group(*spec.algebra);
            auto rep = check_brace_law(group, triples);
            std::cout << "brace: " << (rep.ok ? "pass" : "fail") << "\n";
            if (!rep.ok && rep.witness)
                std::cerr << "witness: x=" << format_coords((*rep.witness)[0])
                          << " y=" << format_coords((*rep.witness)[1])
                          << " z=" << format_coords((*rep.witness)[2]) << "\n";
            return rep.ok ? 0 : 1;
        }

        if (grade->parsed()) {
            AlgebraSpec spec = load_spec(file);
            GradedLieRing ring = spec.rb
                ? graded_rb(FilteredGroup(RBLieAlgebra(*spec.algebra, *spec.rb)))
                : graded_ring(FilteredGroup(*spec.algebra));
            json doc;
            json dims = json::array();
            for (const auto& comp : ring.components()) dims.push_back(comp.basis.size());
            doc["dims"] = dims;
            json brackets = json::object();
            int top = static_cast<int>(ring.components().size());
            for (int n = 1; n <= top; ++n)
                for (int m = 1; m <= top && n + m <= top; ++m)
                    for (std::size_t i = 0; i < ring.components()[n - 1].basis.size(); ++i)
                        for (std::size_t j = 0; j < ring.components()[m - 1].basis.size(); ++j) {
                            const Vec& v = ring.bracket(n, static_cast<int>(i), m,
                                                        static_cast<int>(j));
                            if (!v.empty() && !is_zero(v))
                                brackets[std::to_string(n) + "." + std::to_string(i + 1) + "," +
                                         std::to_string(m) + "." + std::to_string(j + 1)] =
                                    coords_json(v);
                        }
            doc["brackets"] = brackets;
            if (ring.has_op()) {
                json ops = json::array();
                for (int n = 1; n <= top; ++n) {
                    json m = json::array();
                    for (const auto& row : *ring.op(n)) m.push_back(coords_json(row));
                    ops.push_back(m);
                }
                doc["gr_rb"] = ops;
            }
            std::cout << doc.dump(2) << "\n";
            return 0;
        }

        if (uea_cmd->parsed()) {
            AlgebraSpec spec = load_spec(file);
            std::optional<RBLieAlgebra> src;
            if (spec.rb) src.emplace(*spec.algebra, *spec.rb);
            UEAContext ctx = src ? UEAContext(*src) : UEAContext(*spec.algebra);
            if (op_name == "exp") {
                Vec x = parse_coords(x_str, spec.algebra->dim());
                std::cout << serialize_uea(ctx.exp(x)) << "\n";
            } else if (op_name == "log") {
                if (u_str.empty()) throw InputError("log needs --u");
                json arr = json::parse(u_str);
                UEAElement u(ctx);
                for (const auto& entry : arr) {
                    PBWMonomial m;
                    for (int i : entry.at("monomial")) m.push_back(i - 1);
                    u.add_term(m, parse_rational(entry.at("coeff").get<std::string>()));
                }
                std::cout << format_coords(ctx.log(u)) << "\n";
            } else {
                Vec a = parse_coords(a_str, spec.algebra->dim());
                Vec b = parse_coords(b_str, spec.algebra->dim());
                UEAElement ea = ctx.embed(a), eb = ctx.embed(b);
                UEAElement r = op_name == "product" ? ctx.product(ea, eb)
                                                    : ctx.star_product(ea, eb);
                std::cout << serialize_uea(r) << "\n";
            }
            return 0;
        }

        if (gen_free->parsed()) {
            AlgebraSpec spec;
            spec.algebra = std::make_unique<LieAlgebra>(
                build_free_nilpotent(gens, nil_class));
            write_file(out_path, spec.serialize());
            return 0;
        }
        if (gen_poly->parsed()) {
            AlgebraSpec in = load_spec(file);
            AlgebraSpec out;
            out.algebra = std::make_unique<LieAlgebra>(
                extend_by_polynomial_filtration(*in.algebra, levels));
            if (in.rb) {
                // R(x h^k) = R(x) h^k, block diagonal in the h-grading
                int d = in.algebra->dim();
                Mat m(d * levels, zero_vec(d * levels));
                for (int k = 0; k < levels; ++k)
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j)
                            m[k * d + i][k * d + j] = in.rb->coeffs()[i][j];
                out.rb = LinearOperator(*out.algebra, std::move(m));
            }
            write_file(out_path, out.serialize());
            return 0;
        }
        if (gen_split->parsed()) {
            AlgebraSpec spec = load_spec(file);
            auto parse_rows = [&](const std::string& text) {
                Mat rows;
                std::stringstream ss(text);
                std::string item;
                while (std::getline(ss, item, ';'))
                    rows.push_back(parse_coords(item, spec.algebra->dim()));
                return Subspace::span(spec.algebra->dim(), rows);
            };
            spec.rb = splitting_rb(*spec.algebra, parse_rows(a_rows), parse_rows(b_rows));
            write_file(out_path, spec.serialize());
            return 0;
        }

        if (vectors->parsed()) return cmd_vectors(file, count, seed);
        if (verify->parsed()) return cmd_verify(file, records_path);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
