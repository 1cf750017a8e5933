#include "spectra/formula.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace spectra {

void Vocabulary::declare(const std::string& name, int arity) {
    if (arity < 0) throw ValidationError("negative arity for relation " + name);
    if (has(name)) throw ValidationError("duplicate relation declaration: " + name);
    relations.emplace_back(name, arity);
}

bool Vocabulary::has(const std::string& name) const {
    for (auto& [n, a] : relations)
        if (n == name) return true;
    return false;
}

int Vocabulary::arity(const std::string& name) const {
    for (auto& [n, a] : relations)
        if (n == name) return a;
    throw ValidationError("undeclared relation: " + name);
}

FormulaPtr mk_eq(std::string a, std::string b) {
    auto f = std::make_shared<Formula>();
    f->kind = FKind::Eq;
    f->vars = {std::move(a), std::move(b)};
    return f;
}

FormulaPtr mk_atom(std::string rel, std::vector<std::string> args) {
    auto f = std::make_shared<Formula>();
    f->kind = FKind::Atom;
    f->rel = std::move(rel);
    f->vars = std::move(args);
    return f;
}

static FormulaPtr unary(FKind k, FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->lhs = std::move(a);
    return f;
}

static FormulaPtr binary(FKind k, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}

FormulaPtr mk_not(FormulaPtr f) { return unary(FKind::Not, std::move(f)); }
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) { return binary(FKind::And, std::move(a), std::move(b)); }
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) { return binary(FKind::Or, std::move(a), std::move(b)); }
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) { return binary(FKind::Implies, std::move(a), std::move(b)); }
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) { return binary(FKind::Iff, std::move(a), std::move(b)); }

static FormulaPtr quant(FKind k, std::string v, FormulaPtr f) {
    auto q = std::make_shared<Formula>();
    q->kind = k;
    q->vars = {std::move(v)};
    q->lhs = std::move(f);
    return q;
}

FormulaPtr mk_forall(std::string v, FormulaPtr f) { return quant(FKind::Forall, std::move(v), std::move(f)); }
FormulaPtr mk_exists(std::string v, FormulaPtr f) { return quant(FKind::Exists, std::move(v), std::move(f)); }

// Balanced fold keeps tree depth logarithmic; deep right-leaning chains make
// recursive walkers and memo keys quadratic.
static FormulaPtr fold_balanced(FKind k, const std::vector<FormulaPtr>& fs, size_t lo, size_t hi) {
    if (hi - lo == 1) return fs[lo];
    size_t mid = lo + (hi - lo) / 2;
    return binary(k, fold_balanced(k, fs, lo, mid), fold_balanced(k, fs, mid, hi));
}

FormulaPtr mk_and_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) throw SpectraError("mk_and_all: empty list");
    return fold_balanced(FKind::And, fs, 0, fs.size());
}

FormulaPtr mk_or_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) throw SpectraError("mk_or_all: empty list");
    return fold_balanced(FKind::Or, fs, 0, fs.size());
}

FormulaPtr mk_true_on(const std::string& v) { return mk_eq(v, v); }
FormulaPtr mk_false_on(const std::string& v) { return mk_not(mk_eq(v, v)); }

namespace {

// Free variables are intrinsic to a node, so they memoize cleanly even when
// subtrees are shared.
const std::set<std::string>& free_memo(const Formula& f,
                                       std::unordered_map<const Formula*, std::set<std::string>>& memo) {
    auto it = memo.find(&f);
    if (it != memo.end()) return it->second;
    std::set<std::string> out;
    switch (f.kind) {
        case FKind::Eq:
        case FKind::Atom:
            out.insert(f.vars.begin(), f.vars.end());
            break;
        case FKind::Not:
            out = free_memo(*f.lhs, memo);
            break;
        case FKind::Forall:
        case FKind::Exists:
            out = free_memo(*f.lhs, memo);
            out.erase(f.vars[0]);
            break;
        default: {
            out = free_memo(*f.lhs, memo);
            const auto& r = free_memo(*f.rhs, memo);
            out.insert(r.begin(), r.end());
            break;
        }
    }
    return memo.emplace(&f, std::move(out)).first->second;
}

void collect_idents(const Formula& f, std::unordered_set<const Formula*>& seen,
                    std::set<std::string>& out) {
    if (!seen.insert(&f).second) return;
    switch (f.kind) {
        case FKind::Eq:
        case FKind::Atom:
            out.insert(f.vars.begin(), f.vars.end());
            return;
        case FKind::Not:
            collect_idents(*f.lhs, seen, out);
            return;
        case FKind::Forall:
        case FKind::Exists:
            out.insert(f.vars[0]);
            collect_idents(*f.lhs, seen, out);
            return;
        default:
            collect_idents(*f.lhs, seen, out);
            collect_idents(*f.rhs, seen, out);
            return;
    }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
    std::unordered_map<const Formula*, std::set<std::string>> memo;
    return free_memo(f, memo);
}

int distinct_variable_count(const Formula& f) {
    std::unordered_set<const Formula*> seen;
    std::set<std::string> idents;
    collect_idents(f, seen, idents);
    return static_cast<int>(idents.size());
}

namespace {

// Memo per (node, polarity) so shared subtrees stay shared in the output.
struct NnfCtx {
    std::unordered_map<const Formula*, FormulaPtr> pos, neg;

    FormulaPtr nnf(const FormulaPtr& f, bool negated) {
        auto& memo = negated ? neg : pos;
        auto it = memo.find(f.get());
        if (it != memo.end()) return it->second;
        FormulaPtr out = build(f, negated);
        memo.emplace(f.get(), out);
        return out;
    }

    FormulaPtr build(const FormulaPtr& f, bool negated) {
        switch (f->kind) {
            case FKind::Eq:
            case FKind::Atom:
                return negated ? mk_not(f) : f;
            case FKind::Not:
                return nnf(f->lhs, !negated);
            case FKind::And:
                return negated ? mk_or(nnf(f->lhs, true), nnf(f->rhs, true))
                               : mk_and(nnf(f->lhs, false), nnf(f->rhs, false));
            case FKind::Or:
                return negated ? mk_and(nnf(f->lhs, true), nnf(f->rhs, true))
                               : mk_or(nnf(f->lhs, false), nnf(f->rhs, false));
            case FKind::Implies:
                return negated ? mk_and(nnf(f->lhs, false), nnf(f->rhs, true))
                               : mk_or(nnf(f->lhs, true), nnf(f->rhs, false));
            case FKind::Iff:
                // (a&b)|(!a&!b), negated: (a&!b)|(!a&b)
                if (negated)
                    return mk_or(mk_and(nnf(f->lhs, false), nnf(f->rhs, true)),
                                 mk_and(nnf(f->lhs, true), nnf(f->rhs, false)));
                return mk_or(mk_and(nnf(f->lhs, false), nnf(f->rhs, false)),
                             mk_and(nnf(f->lhs, true), nnf(f->rhs, true)));
            case FKind::Forall:
                return negated ? mk_exists(f->vars[0], nnf(f->lhs, true))
                               : mk_forall(f->vars[0], nnf(f->lhs, false));
            case FKind::Exists:
                return negated ? mk_forall(f->vars[0], nnf(f->lhs, true))
                               : mk_exists(f->vars[0], nnf(f->lhs, false));
        }
        throw SpectraError("unreachable formula kind");
    }
};

}  // namespace

FormulaPtr to_negation_normal_form(const FormulaPtr& f) {
    NnfCtx ctx;
    return ctx.nnf(f, false);
}

void validate_against(const Formula& f, const Vocabulary& voc) {
    switch (f.kind) {
        case FKind::Eq:
            return;
        case FKind::Atom:
            if (!voc.has(f.rel)) throw ValidationError("undeclared relation: " + f.rel);
            if (voc.arity(f.rel) != static_cast<int>(f.vars.size()))
                throw ValidationError("arity mismatch for relation " + f.rel);
            return;
        case FKind::Not:
        case FKind::Forall:
        case FKind::Exists:
            validate_against(*f.lhs, voc);
            return;
        default:
            validate_against(*f.lhs, voc);
            validate_against(*f.rhs, voc);
            return;
    }
}

}  // namespace spectra
