#pragma once

#include "fsing/input_format.hpp"

#include <string>
#include <vector>

namespace fsing {

struct BundledFile {
    std::string name;  // file name under fixtures/
    std::string text;
};

/// Every bundled `.fring` input.
const std::vector<BundledFile>& bundled_files();
/// Throws UnknownFixture.
const BundledFile& bundled_file(const std::string& name);

struct Assertion {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FixtureRun {
    std::string id;
    std::vector<Assertion> assertions;
    bool pass() const;
};

std::vector<std::string> fixture_ids();
/// Fixtures whose bundle takes minutes rather than seconds.
bool fixture_is_slow(const std::string& id);
/// Runs the assertion bundle of a fixture. Throws UnknownFixture.
FixtureRun reproduce(const std::string& id);

}  // namespace fsing
