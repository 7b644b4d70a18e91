// Writes a synthetic frame sequence (PNG frames, manifest.json and
// landmarks.jsonl) for trying out the analyzer.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "facesym/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Synthetic face fixture writer", "make_fixture"};
  std::string out_dir;
  std::string kind = "dip";
  bool mirror = false;
  int frames = 60;
  app.add_option("--out", out_dir, "Output directory")->required();
  app.add_option("--kind", kind, "symmetric | dip")
      ->check(CLI::IsMember({"symmetric", "dip"}))
      ->capture_default_str();
  app.add_option("--frames", frames, "Frame count for --kind symmetric")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  app.add_flag("--mirror", mirror, "Flip every frame and its landmarks");
  CLI11_PARSE(app, argc, argv);

  using namespace facesym::synthetic;
  const VideoSpec video =
      kind == "symmetric" ? symmetric_video(frames) : injected_dip_video();
  const WrittenFixture out = write_fixture(video, out_dir, mirror);
  std::cout << out.manifest.string() << '\n' << out.sidecar.string() << '\n';
  return 0;
}
