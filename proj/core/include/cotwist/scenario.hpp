#pragma once

// Line-oriented scenario files: torus declaration, generators, rewrite rules,
// relations, named elements and matrices, grouplike coactions, and check /
// suite directives.  Parsing is total on the grammar; unknown directives are
// hard errors with line positions.

#include "cotwist/cocycle.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotwist {

struct ScenarioError : std::runtime_error {
    int line;
    ScenarioError(int l, const std::string& what)
        : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l) {}
};

struct GenDecl {
    std::string name;
    TorusDegree degree;
    std::string star;      // empty: none declared; may equal the name itself
    bool central = false;
    int line = 0;
};

struct RuleDecl {
    std::vector<std::string> lhs;  // generator names
    std::string rhs;               // element expression
    int line = 0;
};

struct ElemDecl {
    std::string name;
    std::string expr;
    int line = 0;
};

struct MatrixDecl {
    std::string name;
    std::size_t rows = 0, cols = 0;
    std::vector<std::string> entries;  // row-major expressions
    int line = 0;
};

struct CoactionDecl {
    std::string name;
    std::vector<std::pair<std::string, TorusDegree>> weights;  // generator -> weight
    int line = 0;
};

struct CheckDecl {
    std::string kind;
    std::vector<std::string> args;
    int line = 0;
};

struct Scenario {
    std::optional<std::vector<std::vector<Rational>>> theta;  // in theta-units
    std::size_t torus_rank = 0;
    std::vector<GenDecl> gens;
    std::vector<RuleDecl> rules;
    std::vector<std::string> relations;
    std::vector<ElemDecl> elems;
    std::vector<MatrixDecl> matrices;
    std::vector<CoactionDecl> coactions;
    std::vector<CheckDecl> checks;
    std::vector<CheckDecl> suites;
};

Scenario parse_scenario(const std::string& text);
// Canonical rendering; render + parse is the identity on the AST.
std::string render_scenario(const Scenario& s);

bool operator==(const Scenario& a, const Scenario& b);

}  // namespace cotwist
