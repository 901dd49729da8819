#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "pjp/verify.hpp"

int main(int argc, char** argv) {
  pjp::VerifyOptions opts;
  opts.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--jobs") opts.jobs = std::atoi(argv[i + 1]);
    else if (flag == "--box") opts.box = std::atoi(argv[i + 1]);
  }
  std::printf("k-set:");
  for (const auto& k : opts.kset) std::printf(" %s", k.get_str().c_str());
  std::printf("\n");
  int failed = 0;
  for (int id = 1; id <= pjp::kNumCriteria; ++id) {
    auto r = pjp::run_criterion(id, opts);
    std::printf("criterion %2d: %s  %s (%.2fs) [%s]\n", id, r.pass() ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                r.summary().c_str());
    std::fflush(stdout);
    if (!r.pass()) ++failed;
  }
  std::printf("%d of %d criteria passed\n", pjp::kNumCriteria - failed, pjp::kNumCriteria);
  return failed ? 1 : 0;
}
