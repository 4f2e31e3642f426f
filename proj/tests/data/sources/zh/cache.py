class Cache:
    # 如果缓存中没有这个键，就从数据库读取并保存结果。
    def get(self, key):
        if key not in self._data:
            self._data[key] = self._load(key)
        return self._data[key]
