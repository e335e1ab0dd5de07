"""Tick sources for the benchmark harness.

``tsc`` reads the x86-64 time-stamp counter through a few bytes of machine
code mapped executable and called via ctypes (``lfence; rdtsc``).  ``monotonic``
is :func:`time.perf_counter_ns`.  ``auto`` prefers ``tsc``.

Set ``DIOPHANTINE2_TIMER=monotonic`` to force the fallback.
"""
from __future__ import annotations

import ctypes
import mmap
import os
import platform
import time
from dataclasses import dataclass
from typing import Callable

TIMER_ENV = "DIOPHANTINE2_TIMER"

# lfence; rdtsc; shl rdx, 32; or rax, rdx; ret
_RDTSC_X86_64 = bytes([
    0x0F, 0xAE, 0xE8,
    0x0F, 0x31,
    0x48, 0xC1, 0xE2, 0x20,
    0x48, 0x09, 0xD0,
    0xC3,
])


class TimerUnavailable(RuntimeError):
    pass


@dataclass(frozen=True)
class Timer:
    name: str
    unit: str
    read: Callable[[], int]

    def metadata(self) -> dict:
        return {"timer_backend": self.name, "tick_unit": self.unit}


_tsc_cache: dict = {}


def _make_tsc() -> Timer:
    if "timer" in _tsc_cache:
        return _tsc_cache["timer"]
    if platform.machine().lower() not in ("x86_64", "amd64"):
        raise TimerUnavailable(f"no cycle counter backend for {platform.machine()}")
    try:
        buf = mmap.mmap(-1, mmap.PAGESIZE,
                        prot=mmap.PROT_READ | mmap.PROT_WRITE | mmap.PROT_EXEC)
    except (OSError, AttributeError, ValueError) as exc:
        raise TimerUnavailable(f"cannot map executable page: {exc}") from exc
    buf.write(_RDTSC_X86_64)
    addr = ctypes.addressof(ctypes.c_char.from_buffer(buf))
    fn = ctypes.CFUNCTYPE(ctypes.c_uint64)(addr)
    t0 = fn()
    if fn() < t0:
        raise TimerUnavailable("time-stamp counter is not monotonic")
    timer = Timer("tsc", "cycles", fn)
    # the mapping must outlive the function pointer
    _tsc_cache["buf"] = buf
    _tsc_cache["timer"] = timer
    return timer


def _make_monotonic() -> Timer:
    if not time.get_clock_info("perf_counter").monotonic:
        raise TimerUnavailable("perf_counter is not monotonic on this platform")
    return Timer("monotonic", "ns", time.perf_counter_ns)


def get_timer(backend: str = "auto") -> Timer:
    forced = os.environ.get(TIMER_ENV)
    if forced:
        backend = forced
    if backend == "tsc":
        return _make_tsc()
    if backend == "monotonic":
        return _make_monotonic()
    if backend == "auto":
        try:
            return _make_tsc()
        except TimerUnavailable:
            return _make_monotonic()
    raise ValueError(f"unknown timer backend {backend!r}")
