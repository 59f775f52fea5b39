#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e2lab/verify.hpp"

#include <algorithm>

using namespace e2lab;

namespace {

std::vector<Int> multiples(int d, int count) {
    std::vector<Int> out;
    for (int k = 1; k <= count; ++k) out.emplace_back(d * k);
    return out;
}

const Check& check_named(const Certificate& cert, const std::string& name) {
    for (const auto& c : cert.checks)
        if (c.name == name) return c;
    FAIL("missing check: ", name);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("family certificate passes for d = 2") {
    Certificate cert = family_certificate(2, multiples(2, 20));
    CHECK(cert.overall() == CheckStatus::Pass);
    // one global word check plus eight per value
    CHECK(cert.checks.size() == 1 + 8 * 20);
    CHECK(check_named(cert, "s-word").status == CheckStatus::Pass);
    CHECK(check_named(cert, "family-det[n=2]").status == CheckStatus::Pass);
    CHECK(check_named(cert, "special-norms[n=2]").witness ==
          "|a|^2=13 |b|^2=13 |a+b|^2=36 |a-b|^2=16");
    CHECK(check_named(cert, "class-distinct[n=40]").status == CheckStatus::Pass);
}

TEST_CASE("family certificate passes for larger d") {
    for (int d : {3, 4, 5}) {
        Certificate cert = family_certificate(d, multiples(d, 3));
        CHECK(cert.overall() == CheckStatus::Pass);
    }
}

TEST_CASE("family certificate rejects bad parameters") {
    CHECK_THROWS_AS(family_certificate(1, {Int(2)}), OutOfScopeRingError);
    CHECK_THROWS_AS(family_certificate(2, {Int(3)}), std::invalid_argument);
    CHECK_THROWS_AS(family_certificate(2, {Int(0)}), std::invalid_argument);
}

TEST_CASE("tampered family matrix fails the determinant check with values") {
    Certificate cert = detail::family_certificate_tampered(2, {Int(2)}, 1);
    CHECK(cert.overall() == CheckStatus::Fail);
    const Check& c = check_named(cert, "family-det[n=2]");
    CHECK(c.status == CheckStatus::Fail);
    CHECK(c.witness.find("det [[4+1*w") != std::string::npos);  // corrupted entry shown
    CHECK(c.witness.find("= 2-1*w") != std::string::npos);      // and the wrong determinant
    // the untouched checks still pass
    CHECK(check_named(cert, "square-identity[n=2]").status == CheckStatus::Pass);
}

TEST_CASE("bijection certificate passes across rings") {
    CHECK(bijection_certificate(gaussian_order(2), 300, 1).all_pass());
    CHECK(bijection_certificate(gaussian_order(1), 300, 1).all_pass());
    CHECK(bijection_certificate(make_ring(Form::Half, 3), 200, 7).all_pass());
}

TEST_CASE("bijection certificate is deterministic in the seed") {
    Certificate a = bijection_certificate(gaussian_order(2), 100, 9);
    Certificate b = bijection_certificate(gaussian_order(2), 100, 9);
    CHECK(certificate_json(a) == certificate_json(b));
}

TEST_CASE("rigidity scan on the Gaussian-style order") {
    SearchParams params{Int(300), Int(16), 100000, 30};
    Certificate cert = rigidity_certificate(gaussian_order(2), 100, params);
    CHECK(cert.overall() == CheckStatus::Pass);
    // every quadruple contributes closure, three connections, one separation
    std::size_t connected = 0, separated = 0;
    for (const auto& c : cert.checks) {
        if (c.name.starts_with("variants-connected")) {
            ++connected;
            CHECK(c.status == CheckStatus::Pass);
        }
        if (c.name.starts_with("class-separation")) {
            ++separated;
            CHECK(c.status == CheckStatus::Pass);
        }
    }
    CHECK(connected == 3 * separated);
    CHECK(separated >= 2);  // at least two distinct classes in this window
}

TEST_CASE("rigidity scan rejects out-of-scope rings") {
    SearchParams params;
    CHECK_THROWS_AS(rigidity_certificate(gaussian_order(1), 50, params), OutOfScopeRingError);
    CHECK_THROWS_AS(rigidity_certificate(make_ring(Form::Sqrt, 3), 50, params),
                    OutOfScopeRingError);
}

TEST_CASE("starved budgets surface as inconclusive, not as failures") {
    SearchParams tiny{Int(14), Int(1), 50, 2};  // too small for any S route
    Certificate cert = rigidity_certificate(gaussian_order(2), 13, tiny);
    CHECK(cert.overall() == CheckStatus::Inconclusive);
    bool saw_inconclusive = false;
    for (const auto& c : cert.checks) {
        CHECK(c.status != CheckStatus::Fail);
        saw_inconclusive |= c.status == CheckStatus::Inconclusive;
    }
    CHECK(saw_inconclusive);
}

TEST_CASE("certificates serialize, reload, and re-run without drift") {
    std::vector<Certificate> certs;
    certs.push_back(family_certificate(2, multiples(2, 3)));
    certs.push_back(bijection_certificate(gaussian_order(2), 50, 123));
    certs.push_back(rigidity_certificate(gaussian_order(2), 25,
                                         SearchParams{Int(75), Int(9), 20000, 20}));
    for (const auto& cert : certs) {
        std::string json = certificate_json(cert);
        Certificate reloaded = certificate_from_json(json);
        CHECK(certificate_json(reloaded) == json);
        Certificate fresh = rerun(reloaded);
        CHECK(certificate_json(fresh) == json);
    }
}

TEST_CASE("certificate json carries the interface fields") {
    Certificate cert = family_certificate(2, {Int(2)});
    std::string json = certificate_json(cert);
    for (const char* key : {"\"ring\"", "\"checks\"", "\"overall\"", "\"name\"", "\"claim\"",
                            "\"status\"", "\"witness\""})
        CHECK(json.find(key) != std::string::npos);
    CHECK(json.find("\"sqrt:4\"") != std::string::npos);
}
