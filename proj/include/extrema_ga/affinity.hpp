#pragma once

#include <vector>

namespace ega::affinity {

/// Logical CPUs the process may run on, ascending. Empty when unknown.
std::vector<int> allowed_cpus();

/// Restricts the calling thread to one logical CPU. False when unsupported or refused.
bool pin_current_thread(int cpu);

/// Restricts the calling thread to a set of CPUs (used to undo a pin).
bool set_current_thread_cpus(const std::vector<int>& cpus);

/// CPUs the calling thread is currently allowed on.
std::vector<int> current_thread_cpus();

/// Number of online logical CPUs, at least 1.
unsigned hardware_threads();

/// Number of physical cores if it can be determined, otherwise hardware_threads().
unsigned physical_cores();

} // namespace ega::affinity
