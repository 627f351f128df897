#ifndef SEGREKIT_TESTS_CHECK_HPP
#define SEGREKIT_TESTS_CHECK_HPP

#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>

// Minimal assertion harness shared by the test programs: every check is
// counted, failures print file:line plus both sides, and finish() turns the
// tally into the process exit code.

inline int g_checks = 0;
inline int g_failures = 0;

template <typename T, typename = void>
struct HasStrMember : std::false_type {};
template <typename T>
struct HasStrMember<T, std::void_t<decltype(std::declval<const T &>().str())>>
    : std::true_type {};

template <typename T> void print_value(std::ostream &os, const T &v) {
  if constexpr (HasStrMember<T>::value)
    os << v.str();
  else
    os << v;
}

#define CHECK(cond)                                                           \
  do {                                                                        \
    ++g_checks;                                                               \
    if (!(cond)) {                                                            \
      ++g_failures;                                                           \
      std::cout << "FAIL " << __FILE__ << ":" << __LINE__ << ": " << #cond    \
                << "\n";                                                      \
    }                                                                         \
  } while (0)

#define CHECK_EQ(a, b)                                                        \
  do {                                                                        \
    ++g_checks;                                                               \
    auto va = (a);                                                            \
    auto vb = (b);                                                            \
    if (!(va == vb)) {                                                        \
      ++g_failures;                                                           \
      std::ostringstream osa, osb;                                            \
      print_value(osa, va);                                                   \
      print_value(osb, vb);                                                   \
      std::cout << "FAIL " << __FILE__ << ":" << __LINE__ << ": " << #a       \
                << " == " << #b << "\n  left:  " << osa.str()                 \
                << "\n  right: " << osb.str() << "\n";                        \
    }                                                                         \
  } while (0)

inline int finish(const std::string &name) {
  if (g_failures) {
    std::cout << name << ": " << g_failures << " of " << g_checks
              << " checks failed\n";
    return 1;
  }
  std::cout << name << ": all " << g_checks << " checks passed\n";
  return 0;
}

#endif
