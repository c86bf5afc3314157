#pragma once

#define FREQJUMP_VERSION "1.0.0"
