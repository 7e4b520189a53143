// Copyright 2026 The Mik Authors
// Licensed under the Apache License, Version 2.0.
//
// Formula trees over literals with the connectives Not, And, Or, Implies and
// the modal operators Possibly, Necessarily. And/Or are stored n-ary; Not is
// never applied directly to a literal (negation folds into the polarity).

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mik/core/basic.hpp"

namespace mik {

class Formula {
public:
    enum class Kind : std::uint8_t { Lit, Not, And, Or, Implies, Possibly, Necessarily };

    Formula() : kind_(Kind::Lit), lit_() {}

    static Formula lit(Literal l);
    static Formula lit(AtomId atom, bool negative = false) { return lit(Literal(atom, negative)); }
    static Formula negation(Formula f);          // folds literals and double negation
    static Formula conj(std::vector<Formula> kids);
    static Formula disj(std::vector<Formula> kids);
    static Formula implies(Formula a, Formula b);
    static Formula possibly(Formula f);
    static Formula necessarily(Formula f);

    Kind kind() const { return kind_; }
    bool is_literal() const { return kind_ == Kind::Lit; }
    const Literal& literal() const { return lit_; }
    const std::vector<Formula>& children() const { return kids_; }
    const Formula& child(std::size_t i) const { return kids_[i]; }

    bool modal_free() const;
    // Depth of nested modal operators; 0 for modal-free formulas.
    int modal_depth() const;
    void collect_atoms(std::set<AtomId>& out) const;
    std::set<AtomId> atoms() const;

    // If the formula is a conjunction of literals (including a single
    // literal), appends them to `out` and returns true.
    bool as_literal_conjunction(std::vector<Literal>& out) const;

    // Total order used for canonical sorting: by kind, then literal, then
    // children lexicographically.
    int compare(const Formula& other) const;

    friend bool operator==(const Formula& a, const Formula& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Formula& a, const Formula& b) { return a.compare(b) != 0; }
    friend bool operator<(const Formula& a, const Formula& b) { return a.compare(b) < 0; }

    // Remap atom ids through `id_map` (index = old id). Used when moving
    // formulas between name tables.
    Formula remap(const std::vector<AtomId>& id_map) const;

private:
    Kind kind_;
    Literal lit_;                 // Kind::Lit only
    std::vector<Formula> kids_;   // connective operands

    Formula(Kind k, std::vector<Formula> kids) : kind_(k), lit_(), kids_(std::move(kids)) {}
};

// Normal form for node identity: negations pushed onto literals, same-kind
// conjunctions/disjunctions flattened, operands sorted and deduplicated,
// single-operand And/Or collapsed. Not a semantic equivalence check.
Formula canonical(const Formula& f);

}  // namespace mik
