/*
 * Copyright 2026 The idsbench Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Distribution functions used by the rank tests.

#ifndef IDSBENCH_STATS_DISTRIBUTIONS_H_
#define IDSBENCH_STATS_DISTRIBUTIONS_H_

namespace idsbench::stats {

// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in
// [0, 1], evaluated with the modified Lentz continued fraction.
double RegularizedIncompleteBeta(double a, double b, double x);

// CDF and upper tail of the F distribution with (d1, d2) degrees of
// freedom. Both are 0/1 at f <= 0.
double FCdf(double f, double d1, double d2);
double FSurvival(double f, double d1, double d2);

// Standard normal CDF and upper tail.
double NormalCdf(double z);
double NormalSurvival(double z);

}  // namespace idsbench::stats

#endif  // IDSBENCH_STATS_DISTRIBUTIONS_H_
