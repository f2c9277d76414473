#ifndef KSCHUR_MEMO_HPP
#define KSCHUR_MEMO_HPP

#include <chrono>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace kschur {

// Compute-once-then-publish cache: the first requester of a missing key
// computes it (outside the lock, so recursive fills of other keys are fine),
// every other requester blocks on the published future and only ever sees a
// completed value.
template <typename K, typename V>
class memo_table {
public:
    using value_ptr = std::shared_ptr<const V>;

    template <typename F>
    value_ptr get_or_compute(const K& key, F&& compute) {
        std::promise<value_ptr> prom;
        std::shared_future<value_ptr> fut;
        bool owner = false;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = entries_.find(key);
            if (it == entries_.end()) {
                fut = prom.get_future().share();
                entries_.emplace(key, fut);
                owner = true;
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            try {
                prom.set_value(std::make_shared<const V>(compute()));
            } catch (...) {
                prom.set_exception(std::current_exception());
                std::lock_guard<std::mutex> lock(mu_);
                entries_.erase(key);
                throw;
            }
        }
        return fut.get();
    }

    // Insert a precomputed value; keeps any existing entry.
    void seed(const K& key, V value) {
        std::promise<value_ptr> prom;
        auto fut = prom.get_future().share();
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (!entries_.emplace(key, fut).second) return;
        }
        prom.set_value(std::make_shared<const V>(std::move(value)));
    }

    // Visit every completed entry (used by the persistent cache exporter).
    template <typename Fn>
    void for_each_ready(Fn&& fn) const {
        std::map<K, std::shared_future<value_ptr>> snapshot;
        {
            std::lock_guard<std::mutex> lock(mu_);
            snapshot = entries_;
        }
        for (const auto& [key, fut] : snapshot) {
            if (fut.wait_for(std::chrono::seconds(0)) != std::future_status::ready)
                continue;
            try {
                fn(key, *fut.get());
            } catch (...) {
                // poisoned entry, skip
            }
        }
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        entries_.clear();
    }

private:
    mutable std::mutex mu_;
    std::map<K, std::shared_future<value_ptr>> entries_;
};

} // namespace kschur

#endif
