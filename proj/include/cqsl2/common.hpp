#pragma once

#include <stdexcept>
#include <string>

#define CQSL2_STRINGIFY_(x) #x
#define CQSL2_TOSTRING_(x) CQSL2_STRINGIFY_(x)

// Precondition violations and internal consistency failures throw; exact
// arithmetic means there is never a legitimate "almost" case to tolerate.
#define CQSL2_CHECK(cond, msg)                                              \
    do {                                                                    \
        if (!(cond))                                                        \
            throw std::logic_error(std::string(__FILE__                     \
                ":" CQSL2_TOSTRING_(__LINE__) ": ") + (msg));               \
    } while (0)
