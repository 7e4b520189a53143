// Copyright 2026 The Mik Authors
// Licensed under the Apache License, Version 2.0.
//
// Knowledge-base data model: drafts as parsed, validated immutable knowledge
// bases, and revision-producing updates. A KnowledgeBase is a value; updates
// never mutate, they build a new value with the next revision number.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mik/core/basic.hpp"
#include "mik/core/formula.hpp"
#include "mik/lang/source.hpp"

namespace mik {

enum class RuleKind : std::uint8_t { Strict, Defeasible, Modal };

// --- draft statements (parser output, unvalidated) -------------------------

struct AtomDecl {
    std::vector<std::string> names;
    lang::Span span;
};

struct ConstraintDecl {
    std::vector<Literal> members;
    lang::Span span;
};

struct RuleDecl {
    RuleKind kind = RuleKind::Strict;
    std::string label;  // empty: assigned r<position> at build time
    Formula antecedent;
    Formula consequent;
    lang::Span span;
};

using Statement = std::variant<AtomDecl, ConstraintDecl, RuleDecl>;

// Unvalidated bundle of statements. Formulas reference `names` by index in
// first-occurrence order; declared-ness is checked by build_kb, not here.
struct KbDraft {
    std::vector<std::string> names;
    std::vector<Statement> statements;

    AtomId intern(std::string_view name);
    std::optional<AtomId> lookup(std::string_view name) const;

    std::size_t atom_count() const;        // declared names (with repeats)
    std::size_t constraint_count() const;
    std::size_t rule_count() const;
    std::size_t rule_count(RuleKind k) const;
};

// --- validated model --------------------------------------------------------

struct IncompatibilityConstraint {
    std::vector<Literal> members;  // declaration order, deduplicated, arity >= 2
    bool declared = true;          // false: desugared from a strict rule
    std::string origin_label;      // rule label when desugared

    std::vector<Literal> sorted_members() const;
};

struct Rule {
    RuleKind kind = RuleKind::Strict;
    std::string label;
    Formula antecedent;
    Formula consequent;
};

class KnowledgeBase {
public:
    std::uint64_t revision() const { return revision_; }
    std::size_t atom_count() const { return atoms_.size(); }
    const std::vector<std::string>& atom_names() const { return atoms_; }
    const std::string& atom_name(AtomId id) const { return atoms_[id]; }
    std::optional<AtomId> atom_id(std::string_view name) const;

    // Declared constraints followed by strict-rule desugarings, all of which
    // participate in world admissibility.
    const std::vector<IncompatibilityConstraint>& constraints() const { return constraints_; }
    std::size_t declared_constraint_count() const;
    const std::vector<Rule>& rules() const { return rules_; }
    const Rule* rule_by_label(std::string_view label) const;
    std::size_t rule_count(RuleKind k) const;

    // Structural equality modulo canonical ordering; ignores the revision
    // counter (a reparse of printed text always starts at revision 1).
    friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b);
    friend bool operator!=(const KnowledgeBase& a, const KnowledgeBase& b) { return !(a == b); }

private:
    std::uint64_t revision_ = 1;
    std::vector<std::string> atoms_;  // sorted lexicographically; index = AtomId
    std::vector<IncompatibilityConstraint> constraints_;
    std::vector<Rule> rules_;

    friend struct KbBuilder;
};

struct ValidationError {
    std::string message;
    lang::Span span;  // line 0 when the statement has no source position
};

struct BuildResult {
    std::optional<KnowledgeBase> kb;
    std::vector<ValidationError> errors;

    bool ok() const { return kb.has_value(); }
};

// Validates a draft into a revision-1 knowledge base, or reports every
// violation found. Never returns both a KB and errors.
BuildResult build_kb(const KbDraft& draft);

// Appends the draft's statements to the KB's contents and revalidates,
// yielding a new KB with revision + 1. The input KB is untouched.
BuildResult add_statement(const KnowledgeBase& kb, const KbDraft& additions);

// The KB's contents as a draft (one sorted atom declaration, declared
// constraints, rules with explicit labels). build_kb(to_draft(kb)) == kb.
KbDraft to_draft(const KnowledgeBase& kb);

// Maps a formula parsed against `names` into the KB's atom ids.
// Throws UndeclaredAtom.
Formula resolve(const KnowledgeBase& kb, const Formula& f, const std::vector<std::string>& names);

std::optional<Literal> as_literal(const Formula& f);

}  // namespace mik
