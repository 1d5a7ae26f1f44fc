#include "cli.hpp"

#include "hilbcells/errors.hpp"
#include "hilbcells/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace hilbcells::cli {

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    return out;
}

std::vector<int> int_list(const std::string& s)
{
    std::vector<int> v;
    if (s.empty())
        return v;
    for (auto& tok : split(s, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw Usage("bad integer '" + tok + "'");
        } catch (const std::logic_error&) {
            throw Usage("bad integer list '" + s + "'");
        }
    }
    return v;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Usage("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Usage(path + ": " + e.what());
    }
}

std::string superscript(long n)
{
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char c : std::to_string(n))
        s += digits[c - '0'];
    return s;
}

std::string q_poly(const IntPoly& p)
{
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (k == 0 || p[k] != 1)
            out += std::to_string(p[k]);
        if (k > 0)
            out += "q" + (k > 1 ? superscript(static_cast<long>(k)) : std::string());
    }
    return out.empty() ? "0" : out;
}

std::string factored_poincare(const HilbertFunction& T)
{
    std::vector<std::pair<IntPoly, int>> groups;
    for (auto& b : boxes(T)) {
        IntPoly g = gaussian_binomial(b.rows, b.cols);
        if (g.size() == 1)
            continue;
        IntPoly sq(g.size() * 2 - 1, 0);
        for (std::size_t k = 0; k < g.size(); ++k)
            sq[2 * k] = g[k];
        bool found = false;
        for (auto& [p, e] : groups)
            if (p == sq) {
                ++e;
                found = true;
            }
        if (!found)
            groups.push_back({sq, 1});
    }
    if (groups.empty())
        return "1";
    std::string out;
    for (auto& [p, e] : groups)
        out += "(" + q_poly(p) + ")" + (e > 1 ? superscript(e) : std::string());
    return out;
}

std::string part_str(const Partition& p)
{
    return to_string(p);
}

struct Ctx {
    std::string format = "table";
    std::ostream& out;
    bool json() const { return format == "json"; }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"hilbcells: cells, hook codes and ramification of graded ideals in k[x,y]"};
    app.require_subcommand(1);
    app.fallthrough();
    Ctx ctx{"table", out};
    app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "table"}));

    std::function<void()> action;

    // cells enum
    auto* cells = app.add_subcommand("cells", "Cells of G_T");
    cells->require_subcommand(1);
    std::string cells_T;
    auto* cells_enum = cells->add_subcommand("enum", "List the cells for T");
    cells_enum->add_option("--T", cells_T, "Hilbert function, comma separated")->required();
    cells_enum->callback([&] {
        action = [&] {
            HilbertFunction T{int_list(cells_T)};
            auto parts = enumerate_with_diagonal_lengths(T);
            json arr = json::array();
            for (auto& p : parts) {
                MonomialIdeal e{p};
                CellDims d = dims(e);
                if (ctx.json()) {
                    arr.push_back(json{{"partition", to_json(p)}, {"code", to_json(code(p))}, {"dim", d.dim_V}, {"codim", d.codim_V}});
                } else {
                    out << part_str(p) << "  " << to_string(code(p)) << "  dim=" << d.dim_V << " codim=" << d.codim_V << "\n";
                }
            }
            if (ctx.json())
                out << json{{"T", to_json(T)}, {"cells", arr}}.dump() << "\n";
            else
                out << "b(T)=" << parts.size() << "\n";
        };
    });

    // code
    std::string code_p;
    auto* code_cmd = app.add_subcommand("code", "Hook code of a partition");
    code_cmd->add_option("--partition", code_p, "Parts, comma separated")->required();
    code_cmd->callback([&] {
        action = [&] {
            Partition p = int_list(code_p);
            if (!is_partition(p))
                fail("MalformedE", "not a partition: " + to_string(p));
            HookCode d = code(p);
            if (ctx.json())
                out << to_json(d).dump() << "\n";
            else
                out << (d.qs.empty() ? "(empty)" : to_string(d)) << "\n";
        };
    });

    // decode
    std::string dec_T, dec_code;
    auto* decode_cmd = app.add_subcommand("decode", "Partition with a given hook code");
    decode_cmd->add_option("--T", dec_T, "Hilbert function")->required();
    decode_cmd->add_option("--code", dec_code, "Code as JSON, e.g. [[0],[2]] or a HookCode object")->required();
    decode_cmd->callback([&] {
        action = [&] {
            HilbertFunction T{int_list(dec_T)};
            json cj;
            try {
                cj = json::parse(dec_code);
            } catch (const json::exception& e) {
                throw Usage(std::string("--code: ") + e.what());
            }
            HookCode d;
            if (cj.is_object()) {
                d = hookcode_from_json(cj);
            } else {
                require_admissible(T);
                d = HookCode{T.mu(), T.j(), {}};
                for (auto& q : cj)
                    d.qs.push_back(q.get<std::vector<int>>());
                auto bx = boxes(T);
                for (std::size_t k = 0; k < d.qs.size() && k < bx.size(); ++k)
                    d.qs[k].resize(static_cast<std::size_t>(std::max(bx[k].rows, static_cast<int>(d.qs[k].size()))), 0);
            }
            if (!fits(T, d))
                fail("BoxMismatch", "code does not fit the boxes of T");
            Partition p = decode(T, d);
            out << (ctx.json() ? to_json(p).dump() : part_str(p)) << "\n";
        };
    });

    // betti
    std::string betti_T;
    auto* betti = app.add_subcommand("betti", "Poincare polynomial and cell count");
    betti->add_option("--T", betti_T, "Hilbert function")->required();
    betti->callback([&] {
        action = [&] {
            HilbertFunction T{int_list(betti_T)};
            IntPoly p = poincare(T);
            long long b = cell_count(T);
            if (ctx.json())
                out << json{{"T", to_json(T)}, {"poincare", p}, {"b", b}}.dump() << "\n";
            else
                out << factored_poincare(T) << " ; b(T)=" << b << "\n";
        };
    });

    // wronskian
    std::string wr_space;
    auto* wr = app.add_subcommand("wronskian", "Wronskian of a space of binary forms");
    wr->add_option("--space", wr_space, "FormSpace JSON file")->required();
    wr->callback([&] {
        action = [&] {
            FormSpace v = space_from_json(read_json_file(wr_space));
            BinaryForm w = wronskian(v);
            out << (ctx.json() ? to_json(w).dump() : to_string(w)) << "\n";
        };
    });

    // qram
    std::string qr_space, qr_point = "1,0";
    auto* qr = app.add_subcommand("qram", "Ramification data of a space at a point");
    qr->add_option("--space", qr_space, "FormSpace JSON file")->required();
    qr->add_option("--point", qr_point, "a,b for the point ax+by=0 (default x=0)");
    qr->callback([&] {
        action = [&] {
            FormSpace v = space_from_json(read_json_file(qr_space));
            auto ab = split(qr_point, ',');
            if (ab.size() != 2)
                throw Usage("--point needs a,b");
            PointP1 p = make_point(rational_from_string(ab[0]), rational_from_string(ab[1]));
            RamData rd = ram_data(v, p);
            if (ctx.json()) {
                out << json{{"degree_sequence", rd.degree_sequence}, {"qram", to_json(rd.qram)},
                            {"q_partition", to_json(rd.q_partition)}, {"r", rd.r}}
                           .dump()
                    << "\n";
            } else {
                std::string ns;
                for (std::size_t i = 0; i < rd.degree_sequence.size(); ++i)
                    ns += (i ? "," : "") + std::to_string(rd.degree_sequence[i]);
                out << "degree_sequence=(" << ns << ") qram=" << part_str(rd.qram) << " Q=" << part_str(rd.q_partition)
                    << " r=" << rd.r << "\n";
            }
        };
    });

    // build-ideal
    std::string bi_params;
    auto* bi = app.add_subcommand("build-ideal", "Ideal of a cell from its parameters");
    bi->add_option("--params", bi_params, "CellParams JSON file")->required();
    bi->callback([&] {
        action = [&] {
            CellParams cp = params_from_json(read_json_file(bi_params));
            GradedIdeal I = build_ideal(cp);
            MonomialIdeal e = initial_ideal(I);
            std::vector<BinaryForm> gens;
            for (auto& m : e.generators())
                gens.push_back(standard_generator(I, m));
            if (ctx.json()) {
                json g = json::array();
                for (auto& f : gens)
                    g.push_back(to_json(f));
                out << json{{"T", to_json(I.T)}, {"initial_ideal", to_json(e.partition)}, {"generators", g}}.dump() << "\n";
            } else {
                out << "T=" << part_str(I.T.t) << " In(I)=" << part_str(e.partition) << "\n";
                for (auto& f : gens)
                    out << to_string(f) << "\n";
            }
        };
    });

    // grass degree
    auto* grass = app.add_subcommand("grass", "Grassmannian computations");
    grass->require_subcommand(1);
    int gd = 0, gn = 0;
    auto* gdeg = grass->add_subcommand("degree", "Degree [c_1^N] of Grass(d, n)");
    gdeg->add_option("--d", gd)->required();
    gdeg->add_option("--n", gn)->required();
    gdeg->callback([&] {
        action = [&] {
            long long v = grass_degree(gd, gn);
            out << (ctx.json() ? json{{"d", gd}, {"n", gn}, {"degree", v}}.dump() : std::to_string(v)) << "\n";
        };
    });

    // intersect
    int id = 0, ij = 0;
    std::string icond;
    auto* inter = app.add_subcommand("intersect", "Class of an intersection of ramification cells");
    inter->add_option("--d", id)->required();
    inter->add_option("--j", ij)->required();
    inter->add_option("--conditions", icond, "JSON file: list of x-power lists")->required();
    inter->callback([&] {
        action = [&] {
            auto conds = conditions_from_json(read_json_file(icond), ij);
            SchubertClass s = intersect_ramification(id, ij, conds);
            if (ctx.json()) {
                out << to_json(s).dump() << "\n";
            } else {
                if (s.terms.empty())
                    out << "0\n";
                for (auto& [p, c] : s.terms)
                    out << c << " " << part_str(p) << "\n";
            }
        };
    });

    // ring mul
    auto* ring = app.add_subcommand("ring", "The ring H*(G_T) for T(mu, j)");
    ring->require_subcommand(1);
    int rmu = 0, rj = 0;
    std::string rx, ry;
    auto* rmul = ring->add_subcommand("mul", "Product [a,b]*[c,e]");
    rmul->add_option("--mu", rmu)->required();
    rmul->add_option("--j", rj)->required();
    rmul->add_option("--x", rx, "a,b")->required();
    rmul->add_option("--y", ry, "c,e")->required();
    rmul->callback([&] {
        action = [&] {
            auto x = int_list(rx), y = int_list(ry);
            if (x.size() != 2 || y.size() != 2)
                throw Usage("--x and --y take a,b");
            if (rmu < 1 || rj < rmu)
                fail("OutOfRange", "need 1 <= mu <= j");
            if (!in_range(rmu, x[0], x[1]) || !in_range(rmu, y[0], y[1]))
                fail("OutOfRange", "class index outside 0<=a<=mu-1, 0<=b<=mu");
            TClass p = t_multiply(TClass::basis(rmu, rj, x[0], x[1]), TClass::basis(rmu, rj, y[0], y[1]));
            out << (ctx.json() ? to_json(p).dump() : to_string(p)) << "\n";
        };
    });

    // secant pullback
    auto* secant = app.add_subcommand("secant", "Secant classes");
    secant->require_subcommand(1);
    int smu = 0, sj = 0, si = 0;
    auto* spull = secant->add_subcommand("pullback", "Pullback of the i-secant class");
    spull->add_option("--mu", smu)->required();
    spull->add_option("--j", sj)->required();
    spull->add_option("--i", si)->required();
    spull->callback([&] {
        action = [&] {
            TClass c = secant_pullback(smu, sj, si);
            out << (ctx.json() ? to_json(c).dump() : to_string(c)) << "\n";
        };
    });

    // hankel rank
    auto* hankel = app.add_subcommand("hankel", "Hankel matrices");
    hankel->require_subcommand(1);
    int hmu = 0;
    std::string hfile;
    bool hscaled = false;
    auto* hrank = hankel->add_subcommand("rank", "Rank of HANKEL(mu, j-mu, a)");
    hrank->add_option("--mu", hmu)->required();
    hrank->add_option("--coeffs", hfile, "Form JSON file")->required();
    hrank->add_flag("--scaled", hscaled, "Coefficients are already the a_i of sum C(j,i) a_i x^{j-i} y^i");
    hrank->callback([&] {
        action = [&] {
            BinaryForm f = form_from_json(read_json_file(hfile));
            std::vector<Q> a = hscaled ? f.coeffs : scaled_coefficients(f);
            int r = hankel_rank(a, hmu);
            out << (ctx.json() ? json{{"mu", hmu}, {"rank", r}}.dump() : std::to_string(r)) << "\n";
        };
    });

    // example-7-4
    auto* ex = app.add_subcommand("example-7-4", "Four ideals of T=(1,2,3,3,3,3,1) meeting three cells");
    ex->callback([&] {
        action = [&] {
            Example74 r = example_7_4();
            if (ctx.json()) {
                std::vector<std::string> det;
                for (auto& c : r.det.c)
                    det.push_back(rational_to_string(c));
                out << json{{"product", to_json(r.product)}, {"count", r.count}, {"det_poly", det},
                            {"det_degree", r.degree}, {"distinct_roots", r.distinct_roots}}
                           .dump()
                    << "\n";
            } else {
                out << "[1,1]*[0,2] = " << to_string(r.product) << "\n";
                out << "count=" << r.count << "\n";
                out << "det M = " << to_string(r.det, "a") << " (degree " << r.degree << ", " << r.distinct_roots
                    << " distinct roots)\n";
            }
        };
    });

    std::vector<std::string> store{"hilbcells"};
    store.insert(store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : store)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    if (!action) {
        err << "usage error: no command\n";
        return 2;
    }
    try {
        action();
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace hilbcells::cli
