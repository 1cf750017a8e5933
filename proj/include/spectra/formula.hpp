// First-order formulas over a relational vocabulary with equality.
//
// Formulas are immutable trees shared through shared_ptr; identical subtrees
// may be shared freely (the walkers below treat the tree as a DAG), so large
// machine-generated sentences stay compact.

#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectra {

struct SpectraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition or file-format invariant.
struct ValidationError : SpectraError {
    using SpectraError::SpectraError;
};

// A configured resource cap was exceeded (enumeration, windows, configurations).
struct CapExceeded : SpectraError {
    using SpectraError::SpectraError;
};

struct Vocabulary {
    // (name, arity); order is the declaration order. Arity 0 is allowed.
    std::vector<std::pair<std::string, int>> relations;

    void declare(const std::string& name, int arity);
    bool has(const std::string& name) const;
    int arity(const std::string& name) const;  // throws if undeclared
};

enum class FKind : uint8_t {
    Eq,       // v = w
    Atom,     // R(v1..vq)
    Not,
    And,
    Or,
    Implies,
    Iff,
    Forall,   // one variable
    Exists,   // one variable
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    FKind kind;
    std::string rel;                 // Atom: relation name
    std::vector<std::string> vars;   // Atom: argument variables; Eq: the two sides; quantifier: the bound variable
    FormulaPtr lhs, rhs;             // children; unary nodes use lhs only
};

FormulaPtr mk_eq(std::string a, std::string b);
FormulaPtr mk_atom(std::string rel, std::vector<std::string> args);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_forall(std::string v, FormulaPtr f);
FormulaPtr mk_exists(std::string v, FormulaPtr f);

// Balanced conjunction/disjunction of a list. Empty input is rejected; callers
// that can produce empty lists use mk_true_on / mk_false_on instead.
FormulaPtr mk_and_all(const std::vector<FormulaPtr>& fs);
FormulaPtr mk_or_all(const std::vector<FormulaPtr>& fs);

// Constant truth values, spelled with equality so no vocabulary is touched.
// The variable matters for variable-budget accounting: pick one already in use.
FormulaPtr mk_true_on(const std::string& v);
FormulaPtr mk_false_on(const std::string& v);

std::set<std::string> free_variables(const Formula& f);

// Number of distinct variable identifiers occurring anywhere (free or bound,
// reuse counted once).
int distinct_variable_count(const Formula& f);

// Negations pushed to atoms, -> and <-> expanded. Never renames variables, so
// distinct_variable_count does not increase.
FormulaPtr to_negation_normal_form(const FormulaPtr& f);

// Checks arities against the vocabulary; throws ValidationError on mismatch
// or undeclared relation.
void validate_against(const Formula& f, const Vocabulary& voc);

}  // namespace spectra
