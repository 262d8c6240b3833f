#include "semgrid/common.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace semgrid {
namespace {

int configured_workers() {
    if (const char* env = std::getenv("SEMGRID_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Minimal persistent pool. Work is handed out as [begin, end) ranges computed
// up front, so the mapping from index to worker never depends on timing.
class Pool {
public:
    Pool() : n_workers_(configured_workers()) {
        for (int w = 1; w < n_workers_; ++w) {
            threads_.emplace_back([this, w] { worker_loop(w); });
        }
    }

    ~Pool() {
        {
            std::lock_guard lk(mu_);
            stop_ = true;
        }
        cv_.notify_all();
        for (auto& t : threads_) t.join();
    }

    int workers() const { return n_workers_; }

    void run(std::size_t n, const std::function<void(std::size_t)>& fn) {
        if (n == 0) return;
        if (n_workers_ == 1 || n == 1) {
            for (std::size_t i = 0; i < n; ++i) fn(i);
            return;
        }
        {
            std::lock_guard lk(mu_);
            job_fn_ = &fn;
            job_n_ = n;
            pending_ = n_workers_ - 1;
            ++job_id_;
        }
        cv_.notify_all();
        run_range(0, n, n_workers_);  // worker 0 is the calling thread
        std::unique_lock lk(mu_);
        done_cv_.wait(lk, [this] { return pending_ == 0; });
        job_fn_ = nullptr;
    }

private:
    void run_range(int worker, std::size_t n, int n_workers) {
        const std::size_t chunk = (n + n_workers - 1) / n_workers;
        const std::size_t begin = chunk * static_cast<std::size_t>(worker);
        const std::size_t end = std::min(n, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) (*job_fn_)(i);
    }

    void worker_loop(int worker) {
        std::uint64_t seen = 0;
        for (;;) {
            const std::function<void(std::size_t)>* fn = nullptr;
            std::size_t n = 0;
            {
                std::unique_lock lk(mu_);
                cv_.wait(lk, [&] { return stop_ || job_id_ != seen; });
                if (stop_) return;
                seen = job_id_;
                fn = job_fn_;
                n = job_n_;
            }
            run_range(worker, n, n_workers_);
            {
                std::lock_guard lk(mu_);
                if (--pending_ == 0) done_cv_.notify_one();
            }
        }
    }

    const int n_workers_;
    std::vector<std::thread> threads_;
    std::mutex mu_;
    std::condition_variable cv_;
    std::condition_variable done_cv_;
    const std::function<void(std::size_t)>* job_fn_ = nullptr;
    std::size_t job_n_ = 0;
    std::uint64_t job_id_ = 0;
    int pending_ = 0;
    bool stop_ = false;
};

Pool& pool() {
    static Pool p;
    return p;
}

}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    pool().run(n, fn);
}

int worker_count() { return pool().workers(); }

}  // namespace semgrid
