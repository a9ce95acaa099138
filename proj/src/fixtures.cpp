#include "fsing/fixtures.hpp"

#include "fsing/errors.hpp"

#include <algorithm>

namespace fsing {

namespace {

const char* const kSemigroup = R"(# k[s^4, s^3*t, s*t^3, t^4]
char 5
vars a:1 b:1 c:1 d:1
order grevlex
ideal
  b*c - a*d
  b^3 - a^2*c
  c^3 - b*d^2
  a*c^2 - b^2*d
element x = a + d
)";

std::string segre(int p) {
    return "# Segre product of k[x,y,z]/(x^3 + y^3 + z^3) and k[s,t]: a = xs, b = xt, c = ys, d = yt, e = zs, f = zt\n"
           "char " + std::to_string(p) + R"(
vars a:1 b:1 c:1 d:1 e:1 f:1
order grevlex
ideal
  d*e - c*f
  b*e - a*f
  b*c - a*d
  b^3 + d^3 + f^3
  a*b^2 + c*d^2 + e*f^2
  a^2*b + c^2*d + e^2*f
  a^3 + c^3 + e^3
element x = a + d
)";
}

const char* const kFedderSingh = R"(char 5
vars U:2 V:2 Y:1 Z:2
order grevlex
ideal
  U*V
  U*Z
  Z*(V - Y^2)
element y = Y
)";

std::string stanley_reisner(int p) {
    return "char " + std::to_string(p) + R"(
vars u:1 v:1 z:1
order grevlex
ideal
  u*v
  u*z
  v*z
element x = u + v + z
)";
}

const char* const kPolynomialRing = R"(char 3
vars x:1 y:1 z:1
order grevlex
ideal
element t = x
)";

}  // namespace

const std::vector<BundledFile>& bundled_files() {
    static const std::vector<BundledFile> files{
        {"semigroup.fring", kSemigroup},
        {"segre-p2.fring", segre(2)},
        {"segre-p7.fring", segre(7)},
        {"fedder-singh.fring", kFedderSingh},
        {"stanley-reisner-p2.fring", stanley_reisner(2)},
        {"stanley-reisner-p3.fring", stanley_reisner(3)},
        {"stanley-reisner-p5.fring", stanley_reisner(5)},
        {"polynomial-ring.fring", kPolynomialRing},
    };
    return files;
}

const BundledFile& bundled_file(const std::string& name) {
    for (const auto& f : bundled_files())
        if (f.name == name) return f;
    throw UnknownFixture("no bundled file '" + name + "'");
}

bool FixtureRun::pass() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

}  // namespace fsing
