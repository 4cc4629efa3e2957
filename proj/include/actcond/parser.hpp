#pragma once

// Text formats.
//
// Formulas (lowest to highest precedence):
//   =>  (implication, right associative, rewritten to `!a || b`)
//   ||  &&  !  atoms / true / false / ( ... )
//
// Conditionals are written consequent first: `(B | A)`.
//
// Belief-base files are line oriented:
//   # comment
//   sig: a b c          (optional; otherwise inferred in order of first mention)
//   r1: (f | a && w)
//   (b => a | true)     (id defaults to r<position>)
//
// Session files hold one `<id>\t<p>/<q>` record per line, sorted by id, after
// a `#session` header line carrying the query counter.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "actcond/belief_base.hpp"
#include "actcond/logic.hpp"
#include "actcond/memory.hpp"

namespace actcond {

struct BeliefBaseDocument {
  BeliefBase base;
  /// True when the file carried a `sig:` line.
  bool signature_declared = false;
};

/// With `signature` set, unknown atoms raise SignatureMismatch.
Formula parse_formula(std::string_view text, const std::optional<Signature>& signature = std::nullopt);

Conditional parse_conditional(std::string_view text, std::string id = "q",
                              const std::optional<Signature>& signature = std::nullopt);

BeliefBaseDocument parse_belief_base(std::string_view text);
/// Canonical file text; parsing it yields the same document.
std::string format_belief_base(const BeliefBaseDocument& doc);

/// Stable 64-bit FNV-1a digest (16 hex digits) of the canonical base text.
std::string fingerprint(const BeliefBase& base);

/// Extra header data kept next to the activation records.
struct SessionMeta {
  /// Digest of the belief base the levels belong to; empty if unknown.
  std::string base_fingerprint;
  /// Number of times the levels were reset because the base changed.
  std::uint64_t resets = 0;

  friend bool operator==(const SessionMeta&, const SessionMeta&) = default;
};

struct SessionDocument {
  ActivationState state;
  SessionMeta meta;
};

std::string serialize_session(const ActivationState& state, const SessionMeta& meta = {});
ActivationState parse_session(std::string_view text);
SessionDocument parse_session_document(std::string_view text);
/// Throws IdError when `state` and `base` do not cover the same ids.
void check_session_ids(const ActivationState& state, const BeliefBase& base);

}  // namespace actcond
