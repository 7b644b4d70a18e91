#pragma once

#include <stdexcept>
#include <string>

namespace facesym {

// Bad or unreadable user input: manifests, sidecars, images, detector output.
// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Landmark geometry that cannot be aligned, cropped or split.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace facesym
