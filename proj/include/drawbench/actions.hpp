#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace drawbench {

enum class ActionKind { move_to, click, mouse_down, mouse_up };

const char* to_string(ActionKind k);

/// One mouse instruction. Coordinates are meaningful only for move_to.
struct Action {
  ActionKind kind = ActionKind::click;
  std::int64_t x = 0;
  std::int64_t y = 0;

  static Action move_to(std::int64_t x, std::int64_t y) { return {ActionKind::move_to, x, y}; }
  static Action click() { return {ActionKind::click}; }
  static Action mouse_down() { return {ActionKind::mouse_down}; }
  static Action mouse_up() { return {ActionKind::mouse_up}; }

  friend bool operator==(const Action&, const Action&) = default;
};

struct ActionSequence {
  std::vector<Action> actions;
  std::string source_text;  // the raw text the sequence was parsed from
};

enum class SyntaxErrorKind {
  malformed_document,
  unknown_action_kind,
  missing_field,
  non_integer_coordinate,
};

const char* to_string(SyntaxErrorKind k);

struct SyntaxFailure {
  SyntaxErrorKind kind = SyntaxErrorKind::malformed_document;
  std::string message;
  std::size_t offset = 0;                    // byte offset of the candidate array, best effort
  std::optional<std::size_t> element_index;  // offending array element, when known
};

using ParseResult = std::variant<ActionSequence, SyntaxFailure>;

/// Sequences longer than this are rejected to bound interpreter work.
inline constexpr std::size_t kMaxActionsPerSequence = 10000;

/// Extracts the first JSON array of action objects from arbitrary model
/// output, tolerating surrounding prose and code fences. Never throws.
ParseResult parse_actions(std::string_view text);

/// Canonical wire form: one object per line, fields ordered action, x, y.
std::string serialize_actions(const std::vector<Action>& actions);
std::string serialize_actions(const ActionSequence& seq);

}  // namespace drawbench
