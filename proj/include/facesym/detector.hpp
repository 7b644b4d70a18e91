#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "facesym/landmarks.hpp"

namespace facesym {

// Runs `command` through /bin/sh, writes one frame path per line to its stdin
// and reads one sidecar-format JSON line per frame from its stdout, in order.
// Paths are fed from a separate thread, so a detector may answer line by line
// or only after its input is closed.
//
// Throws InputError when the child exits nonzero, dies on a signal, produces
// fewer lines than frames, or emits a record that fails to parse.
std::vector<SidecarRecord> run_detector(
    const std::string& command,
    std::span<const std::filesystem::path> frame_paths);

}  // namespace facesym
