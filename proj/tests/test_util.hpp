// Copyright 2026 The lsbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LSBS_TESTS_TEST_UTIL_HPP
#define LSBS_TESTS_TEST_UTIL_HPP

#include <gtest/gtest.h>

#include "lsbs/error.hpp"

#define EXPECT_LSBS_ERROR(statement, expected_category)                                  \
    do {                                                                                \
        bool lsbs_thrown = false;                                                       \
        try {                                                                           \
            statement;                                                                  \
        } catch (const lsbs::Error& lsbs_error) {                                       \
            lsbs_thrown = true;                                                         \
            EXPECT_EQ(lsbs_error.category(), expected_category) << lsbs_error.what();   \
        }                                                                               \
        EXPECT_TRUE(lsbs_thrown) << "expected lsbs::Error from " #statement;            \
    } while (false)

#endif  // LSBS_TESTS_TEST_UTIL_HPP
