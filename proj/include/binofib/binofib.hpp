/// @file binofib.hpp
/// @brief Umbrella header.
#ifndef BINOFIB_BINOFIB_HPP
#define BINOFIB_BINOFIB_HPP

#include <binofib/numbers.hpp>
#include <binofib/sequences.hpp>
#include <binofib/quad_field.hpp>
#include <binofib/transform.hpp>
#include <binofib/closed_forms.hpp>
#include <binofib/verify.hpp>
#include <binofib/report_json.hpp>
#include <binofib/bench.hpp>

#endif  // BINOFIB_BINOFIB_HPP
