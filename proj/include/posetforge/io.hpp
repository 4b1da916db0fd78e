#pragma once

// Text formats for posets, cochains, thin representations and matrices.
// Every parser reports problems as ParseError with a line number.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "posetforge/cocycles.hpp"
#include "posetforge/diag.hpp"
#include "posetforge/poset.hpp"
#include "posetforge/thin.hpp"

namespace pf {

/// Whole file; ParseError when it cannot be read.
std::string read_file(const std::filesystem::path& path);

PosetPtr load_poset(const std::filesystem::path& path);

/// Lines `x y z : value` (or `x y : value`), all of one length.  The domain
/// is weak when some line repeats an element, strict otherwise.  An optional
/// `poset: <file>` line is ignored here.  MissingValue when incomplete.
MultCochain parse_cochain(std::string_view text, const PosetPtr& p, const Field& f);

/// The `poset: <file>` reference of a cochain or rep file, if present.
std::optional<std::string> poset_reference(std::string_view text);

/// Rep file: `poset: <file>` (relative to the rep file) or inline
/// `elements:`/`covers:` lines, then `support: x y ...`, optional
/// `rel: x<y ...` (generating the order on the support; induced order when
/// absent) and `alpha: x y value` lines.  A missing alpha on a cover of the
/// support is 1; longer intervals are filled by multiplicativity.
ThinRep parse_rep(std::string_view text, const Field& f, const std::filesystem::path& base_dir = {});
ThinRep load_rep(const std::filesystem::path& path, const Field& f);

/// One row per line, space-separated entries (`p/q` over Q).
PatternMatrix parse_matrix(std::string_view text, const Field& f);

}  // namespace pf
