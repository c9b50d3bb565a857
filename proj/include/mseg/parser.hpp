#pragma once

// Input DSL for line tables and multisegment bindings.
//
//   file    := decl* binding*
//   decl    := "line" NAME "{" "degree" "=" INT "," "sigma" "=" sigma "}"
//   sigma   := "self" ("orthogonal" | "symplectic") | NAME
//   binding := "pi" NAME "=" seg ("+" seg)*
//   seg     := "St" "(" INT "," NAME ("," RAT)? ")"     -- exponent defaults to 0
//   RAT     := INT | INT "/" "2"
//
// "--" starts a comment running to end of line; whitespace is insignificant.
// Keywords are reserved and cannot be used as names. parse() also runs the
// semantic checks: duplicate names, undeclared line references (positioned)
// and the line-table involution validation.

#include <string>
#include <string_view>
#include <vector>

#include "mseg/core.hpp"
#include "mseg/error.hpp"

namespace mseg::dsl {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public Error {
public:
    ParseError(errc code, Position pos, const std::string& message)
        : Error(code, std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
          pos_(pos) {}

    Position position() const { return pos_; }

private:
    Position pos_;
};

struct Binding {
    std::string name;
    std::vector<Segment> segments;

    friend bool operator==(const Binding&, const Binding&) = default;
};

struct SourceFile {
    std::vector<CuspidalLine> lines;  // declaration order
    std::vector<Binding> bindings;

    friend bool operator==(const SourceFile&, const SourceFile&) = default;
};

// throws ParseError (positioned) and Error (table-level semantics)
SourceFile parse(std::string_view text);

// Canonical text form; parse(print(f)) == f for any valid file.
std::string print(const SourceFile& file);

// Validated table built from the declarations.
LineTable make_line_table(const SourceFile& file);

// The named binding as a multisegment over the file's table.
// throws unknown_binding
Multisegment make_multisegment(const SourceFile& file, std::string_view pi_name);

}  // namespace mseg::dsl
