#pragma once

#include <functional>
#include <string>

namespace umato {

using WarningHandler = std::function<void(const std::string&)>;

/// Installs a process-wide sink for non-fatal warnings (rank-deficient PCA,
/// shrunken neighbor counts). Returns the previous handler. The default
/// handler writes to stderr.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(const std::string& message);

} // namespace umato
