#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
	int code = -1;
	std::string out;
};

Run run(const std::string& args)
{
	std::string cmd = std::string(STEINBERG_CLI) + " " + args + " 2>/dev/null";
	Run r;
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe);
	std::array<char, 4096> buf;
	size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
		r.out.append(buf.data(), n);
	int status = pclose(pipe);
	r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

std::string data(const char* name) { return std::string(STEINBERG_DATA) + "/" + name; }

} // namespace

TEST_CASE("validate")
{
	CHECK(run("validate " + data("pair2.grpd")).code == 0);
	CHECK(run("validate " + data("s3.grpd")).code == 0);
	CHECK(run("validate " + data("snakeZ.grpd")).code == 0);
	CHECK(run("validate " + data("bad_inverse.grpd")).code == 3);
	CHECK(run("validate " + data("nonexistent.grpd")).code == 4);
	CHECK(run("validate " + data("snake2.elt")).code == 2);
	Run r = run("--format records validate " + data("pair2.grpd"));
	CHECK(r.out.find("status=valid") != std::string::npos);
	CHECK(r.out.find("arrows=4") != std::string::npos);
}

TEST_CASE("missing inverse names the arrow")
{
	std::string cmd = std::string(STEINBERG_CLI) + " validate " + data("bad_inverse.grpd") + " 2>&1";
	FILE* pipe = popen(cmd.c_str(), "r");
	std::string out;
	std::array<char, 512> buf;
	size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
		out.append(buf.data(), n);
	CHECK(WEXITSTATUS(pclose(pipe)) == 3);
	CHECK(out.find("inverse") != std::string::npos);
	CHECK(out.find("'a'") != std::string::npos);
}

TEST_CASE("compute")
{
	Run sq = run("compute " + data("snake2.elt") + " 'f ** f'");
	CHECK(sq.code == 0);
	CHECK(sq.out.find("element result = 2*G0 - 2*B") != std::string::npos);
	Run adj = run("compute " + data("snake2.elt") + " 'adj(f)'");
	CHECK(adj.out.find("element result = 1*G0 - 1*B") != std::string::npos);
	Run zero = run("compute " + data("snake2.elt") + " '0 * f'");
	CHECK(zero.out.find("element result = 0") != std::string::npos);
	Run rec = run("--format records compute " + data("snake2.elt") + " f");
	CHECK(rec.out.find("point=base value=1") != std::string::npos);
	CHECK(rec.out.find("point=head:1 value=-1") != std::string::npos);
	CHECK(run("compute " + data("snake2.elt") + " 'f ** nope'").code == 2);
	CHECK(run("compute " + data("missing.elt") + " f").code == 4);
}

TEST_CASE("eval")
{
	CHECK(run("eval " + data("snake2.elt") + " f base").out == "1\n");
	CHECK(run("eval " + data("snake2.elt") + " f head:1").out == "-1\n");
	CHECK(run("eval " + data("snake2.elt") + " f unit:1").out == "0\n");
	CHECK(run("eval " + data("pair2.elt") + " x e_uv").out == "1-1i\n");
	CHECK(run("eval " + data("pair2.elt") + " x e_ww").code == 2);
}

TEST_CASE("norm")
{
	Run s = run("--format records norm " + data("snake2.elt") + " f --kind sandwich");
	CHECK(s.code == 0);
	CHECK(s.out.starts_with("sup=1 inorm=2 reduced=2 reduced_tol=1e-10 mf=2 bisection_bound=false"));
	CHECK(s.out.find("pinned=true") != std::string::npos);
	CHECK(run("norm " + data("snake2.elt") + " '3*B' --kind sup").out == "3\n");
	CHECK(run("norm " + data("pair2.elt") + " swap --kind inorm").out == "1\n");
	Run red = run("norm " + data("snakeZ.elt") + " p --kind reduced");
	CHECK(red.code == 2);
	Run sym = run("--format records norm " + data("snakeZ.elt") + " one --kind symbol");
	CHECK(sym.out == "symbol=1 symbol_tol=0\n");
	Run spec = run("--format records norm " + data("snake2.elt") + " '2*U - V' --kind spectrum");
	CHECK(spec.out == "spectrum=-1,2 spectral_radius=2\n");
	CHECK(run("norm " + data("snake2.elt") + " f --kind spectrum").code == 2);
	CHECK(run("norm " + data("snake2.elt") + " f --kind bogus").code == 2);
}

TEST_CASE("rewrite, restrict and decompose")
{
	Run rw = run("rewrite " + data("snake2.elt") + " f --within U,U1");
	CHECK(rw.code == 0);
	CHECK(rw.out.find("element rewritten = 1*U - 1*U1") != std::string::npos);
	CHECK(run("rewrite " + data("snake2.elt") + " f --within U").code == 2);

	Run rs = run("restrict " + data("snake2.elt") + " g --to U1 --within B");
	CHECK(rs.out.find("element restricted = 3*U1") != std::string::npos);

	Run dc = run("--format records decompose " + data("snake2.elt") + " h --cover U,U1,V --epsilon 0.01");
	CHECK(dc.code == 0);
	CHECK(dc.out.find("part=1 assigned=U sup=2") != std::string::npos);
	CHECK(dc.out.find("part=3 assigned=V sup=1") != std::string::npos);
	Run dh = run("decompose " + data("snake2.elt") + " h --cover U,U1,V");
	CHECK(dh.out.find("element f1 = 2*U") != std::string::npos);
	CHECK(run("decompose " + data("snake2.elt") + " h --cover U --epsilon 0.1").code == 2);
	CHECK(run("decompose " + data("snake2.elt") + " h --cover U,U1,V --epsilon 0").code == 2);
}

TEST_CASE("verify")
{
	Run zero = run("--format records verify --suite all --trials 0");
	CHECK(zero.code == 0);
	CHECK(zero.out.find("cases=0 failures=0 status=pass") != std::string::npos);
	CHECK(zero.out.find("status=fail") == std::string::npos);

	Run bad = run("--format records verify --suite axioms --trials 2 --fixture " + data("bad_inverse.grpd"));
	CHECK(bad.code == 1);
	CHECK(bad.out.find("property=fixture-inverse cases=1 failures=1 status=fail") != std::string::npos);

	Run ok = run("verify --suite lemmas,convolution --trials 10 --seed 3");
	CHECK(ok.code == 0);
	CHECK(ok.out.find("all properties hold") != std::string::npos);
	CHECK(run("verify --suite nonsense").code == 2);
}

TEST_CASE("usage errors")
{
	CHECK(run("").code == 2);
	CHECK(run("frobnicate").code == 2);
	CHECK(run("--format yaml verify --trials 0").code == 2);
	CHECK(run("--help").code == 0);
}
