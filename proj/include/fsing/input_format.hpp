#pragma once

#include "fsing/ideal.hpp"

#include <map>
#include <string>
#include <vector>

namespace fsing {

/// Parses an expression over the ring's variables using + - * ^, parentheses
/// and integer literals. Throws ParseError.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text, int line = 1, int column_offset = 0);

/// Contents of a `.fring` file.
struct RingInput {
    std::uint32_t characteristic = 0;
    std::vector<std::string> var_names;
    std::vector<std::int64_t> weights;
    std::string order = "grevlex";
    std::vector<std::string> ideal_text;     // generator expressions as written
    std::vector<std::pair<std::string, std::string>> element_text;  // name, expression

    RingPtr ring;
    Ideal ideal;
    std::map<std::string, Polynomial> elements;

    const Polynomial& element(const std::string& name) const;
};

/// Line-oriented format:
///   char <p>
///   vars a:1 b:2 ...
///   order grevlex
///   ideal
///     <expr>          (one generator per indented line)
///   element <name> = <expr>
/// `#` starts a comment. Throws ParseError, NonPrimeCharacteristic, NonHomogeneous.
RingInput parse_input(const std::string& text);
/// Canonical text form; parse_input(print_input(x)) reproduces x.
std::string print_input(const RingInput& in);

}  // namespace fsing
