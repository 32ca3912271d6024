#pragma once

#define PLENAR_VERSION "0.1.0"

namespace plenar {
inline const char* version() { return PLENAR_VERSION; }
}
