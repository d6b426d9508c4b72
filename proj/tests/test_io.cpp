#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "spanmu/cli.hpp"
#include "spanmu/error.hpp"
#include "spanmu/io.hpp"
#include "support.hpp"

using namespace spanmu;
using namespace testing;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class Workdir {
public:
    Workdir()
    {
        root_ = fs::temp_directory_path() / ("spanmu_io_" + std::to_string(std::random_device{}()));
        fs::create_directories(root_);
    }
    ~Workdir() { fs::remove_all(root_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        auto p = root_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }

    [[nodiscard]] std::string path(const std::string& name) const { return (root_ / name).string(); }

private:
    fs::path root_;
};

} // namespace

TEST_CASE("graph file parsing")
{
    auto g = parse_graph("spanmu-graph v1\n# comment\n5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    CHECK(g.n() == 5);
    CHECK(g.m() == 5);
    CHECK(g.has_edge(4, 0));
    CHECK(parse_graph("spanmu-graph v1\r\n1 0\r\n").n() == 1);
    CHECK(format_graph(g) == "spanmu-graph v1\n5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    CHECK(parse_graph(format_graph(g)).edges() == g.edges());

    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("spanmu-graph v2\n2 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("spanmu-graph v1\n2 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("spanmu-graph v1\n2 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("spanmu-graph v1\n2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("spanmu-graph v1\n3 2\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("spanmu-graph v1\n3 1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("spanmu-graph v1\n3 1\n0 +1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("spanmu-graph v1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("spanmu-graph v1\n"), ParseError);
}

TEST_CASE("certificate JSON round trip")
{
    CertificateDoc doc;
    doc.cert.kind = CertificateCase::EnlargedIndep;
    doc.cert.n = 7;
    doc.cert.m = 9;
    doc.cert.k = 2;
    doc.cert.t = 3;
    doc.cert.start = 1;
    doc.cert.mu = Rational(29, 14);
    doc.cert.bound = Rational(7, 2);
    doc.cert.witness = IndependentSetWitness{{0, 3, 5}};
    doc.cert.trace_digest = "00112233445566ff";
    doc.tree_edges = {{0, 1}, {1, 2}};
    doc.alpha = 3;

    auto back = certificate_from_json(certificate_to_json(doc));
    CHECK(back.cert.kind == doc.cert.kind);
    CHECK(back.cert.mu == doc.cert.mu);
    CHECK(back.cert.bound == doc.cert.bound);
    CHECK(std::get<IndependentSetWitness>(back.cert.witness) == std::get<IndependentSetWitness>(doc.cert.witness));
    CHECK(back.tree_edges == doc.tree_edges);
    CHECK(back.alpha == 3);
    CHECK(back.cert.start == 1);
    CHECK(back.cert.trace_digest == doc.cert.trace_digest);

    doc.alpha.reset();
    doc.cert.witness = SwappedEdge{{1, 2}, {0, 4}};
    auto j = certificate_to_json(doc);
    CHECK(j.find("\"alpha\": null") != std::string::npos);
    back = certificate_from_json(j);
    CHECK_FALSE(back.alpha.has_value());
    CHECK(std::get<SwappedEdge>(back.cert.witness) == std::get<SwappedEdge>(doc.cert.witness));

    doc.cert.witness = std::monostate{};
    back = certificate_from_json(certificate_to_json(doc));
    CHECK(std::holds_alternative<std::monostate>(back.cert.witness));

    CHECK_THROWS_AS(certificate_from_json("{"), ParseError);
    CHECK_THROWS_AS(certificate_from_json("[]"), ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"case":"STAR"})"), ParseError);
    auto bad = certificate_to_json(doc);
    auto pos = bad.find("\"num\": \"29\"");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 11, "\"num\": 29");
    CHECK_THROWS_AS(certificate_from_json(bad), ParseError);
}

TEST_CASE("cli construct and verify")
{
    Workdir w;
    auto c5 = w.write("c5.txt", format_graph(cycle_graph(5)));
    auto r = run({"construct", c5, "--alpha"});
    REQUIRE(r.code == 0);
    auto doc = certificate_from_json(r.out);
    CHECK(doc.cert.mu == Rational(2));
    CHECK(doc.alpha == 2);
    CHECK(doc.cert.mu < doc.cert.bound);
    CHECK(r.out.find("\"num\": \"2\"") != std::string::npos);

    auto cert = w.write("c5.json", r.out);
    auto v = run({"verify", c5, cert});
    CHECK(v.code == 0);

    auto tampered = doc;
    tampered.cert.mu = Rational(3);
    auto bad = w.write("bad.json", certificate_to_json(tampered));
    auto vb = run({"verify", c5, bad});
    CHECK(vb.code != 0);
    CHECK(vb.err.find("mu-mismatch") != std::string::npos);

    auto c6 = w.write("c6.txt", format_graph(cycle_graph(6)));
    CHECK(run({"verify", c6, cert}).code == 4);

    auto k4 = w.write("k4.txt", format_graph(complete_graph(4)));
    auto rk = run({"construct", k4});
    REQUIRE(rk.code == 0);
    auto dk = certificate_from_json(rk.out);
    CHECK(to_string(dk.cert.kind) == "STAR");
    CHECK(dk.cert.mu == Rational(3, 2));
    CHECK_FALSE(dk.alpha.has_value());

    auto table = run({"construct", k4, "--table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("STAR") != std::string::npos);

    auto single = run({"construct", c5, "--start", "2", "--no-refine"});
    CHECK(single.code == 0);
    CHECK(certificate_from_json(single.out).cert.start == 2);

    auto dis = w.write("dis.txt", "spanmu-graph v1\n4 2\n0 1\n2 3\n");
    CHECK(run({"construct", dis}).code == 3);
    auto junk = w.write("junk.txt", "hello\n");
    CHECK(run({"construct", junk}).code == 2);
    CHECK(run({"construct", w.path("missing.txt")}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli oracle")
{
    Workdir w;
    auto c5 = w.write("c5.txt", format_graph(cycle_graph(5)));
    auto r = run({"oracle", c5});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("mrct_mu: 2/1") != std::string::npos);
    CHECK(r.out.find("constructed_mu: 2/1") != std::string::npos);
    CHECK(r.out.find("alpha: 2") != std::string::npos);

    auto g = run({"oracle", "--gen", "EXTREMAL_DUMBBELL:n=8:k=2"});
    REQUIRE(g.code == 0);
    CHECK(g.out.find("mrct_mu: 29/14") != std::string::npos);

    auto k6 = w.write("k6.txt", format_graph(complete_graph(6)));
    CHECK(run({"oracle", k6, "--cap", "100"}).code == 5);
    CHECK(run({"oracle"}).code == 2);
}

TEST_CASE("cli gen and bench")
{
    Workdir w;
    auto g = run({"gen", "--family", "EXTREMAL_DUMBBELL:n=8:k=2"});
    REQUIRE(g.code == 0);
    auto db = parse_graph(g.out);
    CHECK(db.n() == 8);
    CHECK(db.m() == 13);
    CHECK(parse_graph(run({"gen", "--family", "CYCLE:n=5"}).out).m() == 5);
    CHECK(parse_graph(run({"gen", "--family", "PATH:n=4"}).out).m() == 3);
    CHECK(run({"gen", "--family", "EXTREMAL_DUMBBELL:n=3:k=2"}).code == 2);
    auto out = w.path("g.txt");
    CHECK(run({"gen", "--family", "CYCLE:n=7", "--out", out}).code == 0);
    CHECK(read_graph_file(out).m() == 7);

    const std::string header = "name,n,m,alpha,k,t,case,mu_num,mu_den,bound_num,bound_den,gap_decimal\n";
    auto k10 = run({"bench", "--family", "COMPLETE:n=10"});
    REQUIRE(k10.code == 0);
    CHECK(k10.out == header + "COMPLETE:n=10,10,45,1,1,1,STAR,9,5,2,1,0.2000000000\n");

    auto gnp = run({"bench", "--family", "GNP_CONNECTED:n=12:p=1/4", "--reps", "5", "--seed", "3"});
    REQUIRE(gnp.code == 0);
    std::istringstream lines(gnp.out);
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        REQUIRE(f.size() == 12);
        Rational mu{BigInt{f[7]}, BigInt{f[8]}};
        CHECK(mu < Rational(std::stoi(f[3]) + 1));
    }
    CHECK(rows == 5);
    CHECK(run({"bench", "--family", "GNP_CONNECTED:n=12:p=1/4", "--reps", "5", "--seed", "3"}).out == gnp.out);

    auto dumb = run({"bench", "--family", "EXTREMAL_DUMBBELL:k=4:n=40"});
    REQUIRE(dumb.code == 0);
    CHECK(dumb.out.find("EXTREMAL_DUMBBELL:k=4:n=40,40,") != std::string::npos);
    CHECK(dumb.out.find(",4,4,") != std::string::npos);

    CHECK(run({"bench", "--family", "BAD:n=3"}).code == 2);
    auto csv = w.path("b.csv");
    CHECK(run({"bench", "--family", "PATH:n=6", "--out", csv}).code == 0);
    CHECK(read_text_file(csv).rfind(header, 0) == 0);
}
